#include "doctest.h"

#include <numeric>

#include "dlpar/cyclotomic.hpp"

using namespace dlpar;

TEST_SUITE("cyclotomic")
{
    TEST_CASE("cyclotomic polynomials")
    {
        CHECK(cyclotomic_poly(1) == std::vector<long long>{-1, 1});
        CHECK(cyclotomic_poly(2) == std::vector<long long>{1, 1});
        CHECK(cyclotomic_poly(8) == std::vector<long long>{1, 0, 0, 0, 1});
        CHECK(cyclotomic_poly(9) == std::vector<long long>{1, 0, 0, 1, 0, 0, 1});
        CHECK(cyclotomic_poly(12) == std::vector<long long>{1, 0, -1, 0, 1});
        // product over d | N of Phi_d has degree N
        for (int N = 1; N <= 40; ++N) {
            size_t deg = 0;
            for (int d = 1; d <= N; ++d)
                if (N % d == 0) deg += cyclotomic_poly(d).size() - 1;
            CHECK(static_cast<int>(deg) == N);
        }
    }

    TEST_CASE("roots of unity")
    {
        for (int N : {1, 2, 3, 4, 6, 8, 12, 24}) {
            Cyclo sum(N);
            for (int k = 0; k < N; ++k) sum += Cyclo::zeta(N, k);
            CHECK(sum == (N == 1 ? Cyclo::rational(Rat(1)) : Cyclo(N)));
            CHECK(Cyclo::zeta(N, N) == Cyclo::rational(Rat(1), N));
            CHECK(Cyclo::zeta(N, 1) * Cyclo::zeta(N, -1) == Cyclo::rational(Rat(1), N));
        }
        CHECK(Cyclo::zeta(4, 1) * Cyclo::zeta(4, 1) == Cyclo::rational(Rat(-1), 4));
        CHECK(Cyclo::zeta(6, 1) + Cyclo::zeta(6, 5) == Cyclo::rational(Rat(1), 6));
    }

    TEST_CASE("norms and Galois action")
    {
        Cyclo a = Cyclo::zeta(8, 1) + Cyclo::zeta(8, 2) * Rat(3) + Cyclo::rational(Rat(1, 2), 8);
        Cyclo n = a * a.conj();
        // a times its conjugate is real but not rational
        CHECK(n.galois(7) == n);
        CHECK(n.galois(3) != n);
        CHECK(a.galois(-1) == a.conj());
        CHECK(a.galois(1) == a);
        CHECK((a * a.galois(3) * a.galois(5) * a.galois(7)).as_rational().has_value());
        CHECK_FALSE(a.as_rational().has_value());
    }

    TEST_CASE("lifting preserves the number")
    {
        Cyclo a = Cyclo::zeta(3, 1) * Rat(2) + Cyclo::rational(Rat(-1), 3);
        Cyclo b = a.lift(12);
        CHECK(b.order() == 12);
        CHECK(b == Cyclo::zeta(12, 4) * Rat(2) + Cyclo::rational(Rat(-1), 12));
        CHECK((b - a.lift(12)).is_zero());
    }

    TEST_CASE("reduced serialization is canonical")
    {
        Cyclo a = Cyclo::zeta(3, 2);
        Cyclo b = Cyclo::rational(Rat(-1), 3) - Cyclo::zeta(3, 1);
        CHECK(a == b);
        CHECK(a.to_json() == b.to_json());
        CHECK(a.reduced() == std::vector<Rat>{Rat(-1), Rat(-1)});
    }
}
