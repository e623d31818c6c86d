#include "doctest.h"

#include <set>

#include "dlpar/errors.hpp"
#include "dlpar/field.hpp"

using namespace dlpar;

namespace {

// schoolbook product of digit vectors modulo x^n + c_{n-1} x^{n-1} + ... + c_0
int slow_mul(int p, int n, const std::vector<int>& low, int a, int b)
{
    std::vector<int> da(n), db(n), prod(2 * n, 0);
    for (int i = 0; i < n; ++i, a /= p, b /= p) {
        da[i] = a % p;
        db[i] = b % p;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (int k = 2 * n - 1; k >= n; --k) {
        int c = prod[k];
        prod[k] = 0;
        for (int j = 0; j < n; ++j) prod[k - n + j] = ((prod[k - n + j] - c * low[j]) % p + p) % p;
    }
    int out = 0;
    for (int i = n - 1; i >= 0; --i) out = out * p + prod[i];
    return out;
}

const std::vector<std::pair<int, int>> kSmallFields = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}};

}  // namespace

TEST_SUITE("field")
{
    TEST_CASE("multiplication matches polynomial arithmetic")
    {
        for (auto [p, n] : kSmallFields) {
            const Field& F = Field::get(p, n);
            CAPTURE(p);
            CAPTURE(n);
            REQUIRE(static_cast<int>(F.modulus().size()) == n);
            for (int a = 0; a < F.size(); ++a)
                for (int b = 0; b < F.size(); ++b) REQUIRE(F.mul(a, b) == slow_mul(p, n, F.modulus(), a, b));
        }
    }

    TEST_CASE("field axioms and inverses")
    {
        for (auto [p, n] : kSmallFields) {
            const Field& F = Field::get(p, n);
            for (int a = 0; a < F.size(); ++a) {
                CHECK(F.add(a, F.neg(a)) == 0);
                CHECK(F.sub(F.add(a, 7 % F.size()), 7 % F.size()) == a);
                if (a) CHECK(F.mul(a, F.inv(a)) == 1);
                for (int b = 0; b < F.size(); b += 3) CHECK(F.add(a, b) == F.add(b, a));
            }
        }
    }

    TEST_CASE("multiplicative group is cyclic of order q - 1")
    {
        for (auto [p, n] : kSmallFields) {
            const Field& F = Field::get(p, n);
            if (F.size() > 81) continue;
            int g = F.generator();
            CHECK(F.order(g) == F.size() - 1);
            std::set<int> seen;
            for (int k = 0; k < F.size() - 1; ++k) seen.insert(F.pow(g, k));
            CHECK(static_cast<int>(seen.size()) == F.size() - 1);
            for (int a = 1; a < F.size(); ++a) CHECK((F.size() - 1) % F.order(a) == 0);
        }
    }

    TEST_CASE("Frobenius is additive and multiplicative with order n")
    {
        for (auto [p, n] : kSmallFields) {
            const Field& F = Field::get(p, n);
            for (int a = 0; a < F.size(); ++a) {
                CHECK(F.frob(a, n) == a);
                CHECK(F.frob(a, 1) == F.pow(a, p));
                for (int b = 0; b < F.size(); b += 5) {
                    CHECK(F.frob(F.add(a, b), 1) == F.add(F.frob(a, 1), F.frob(b, 1)));
                    CHECK(F.frob(F.mul(a, b), 1) == F.mul(F.frob(a, 1), F.frob(b, 1)));
                }
            }
        }
    }

    TEST_CASE("subfields have the right size")
    {
        const Field& F = Field::get(2, 4);
        CHECK(F.subfield(1).size() == 2);
        CHECK(F.subfield(2).size() == 4);
        CHECK(F.subfield(4).size() == 16);
        const Field& G = Field::get(3, 2);
        CHECK(G.subfield(1) == std::vector<int>{0, 1, 2});
    }

    TEST_CASE("tower embeddings are ring homomorphisms")
    {
        FieldTower T(3, 1, 4);
        CHECK(T.q() == 3);
        for (auto [from, to] : std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 4}}) {
            const Field& A = T.level(from);
            const Field& B = T.level(to);
            std::set<int> image;
            for (int a = 0; a < A.size(); ++a) {
                int ea = T.embed(a, from, to);
                image.insert(ea);
                CHECK(B.in_subfield(ea, from));
                for (int b = 0; b < A.size(); ++b) {
                    CHECK(T.embed(A.mul(a, b), from, to) == B.mul(ea, T.embed(b, from, to)));
                    CHECK(T.embed(A.add(a, b), from, to) == B.add(ea, T.embed(b, from, to)));
                }
                CHECK(T.embed(T.frobenius(a, from), from, to) == T.frobenius(ea, to));
            }
            CHECK(static_cast<int>(image.size()) == A.size());
        }
    }
}

TEST_SUITE("truncated_ring")
{
    TEST_CASE("small series identities")
    {
        const Field& F = Field::get(3, 1);
        TruncatedSeries one_plus_t(F, {1, 1, 0});
        TruncatedSeries one_minus_t(F, {1, 2, 0});
        CHECK(one_plus_t * one_minus_t == TruncatedSeries(F, {1, 0, 2}));
        CHECK(one_plus_t.inv() == TruncatedSeries(F, {1, 2, 1}));
        TruncatedSeries u(F, {2, 1, 1, 0});
        CHECK((TruncatedSeries::monomial(F, 4, 1, 2) * u).valuation() == 2);
        CHECK(TruncatedSeries(F, 4).valuation() == 4);
        CHECK(one_plus_t.encode() == "[1,1,0]");
    }

    TEST_CASE("non-units have no inverse")
    {
        const Field& F = Field::get(2, 1);
        TruncatedSeries t(F, {0, 1});
        CHECK_FALSE(t.is_unit());
        CHECK_THROWS(t.inv());
    }

    TEST_CASE("unit group order of F_q[t]/t^r")
    {
        for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
            const Field& F = Field::get(p, n);
            int q = F.size();
            for (int r = 1; r <= 4; ++r) {
                long long total = 1;
                for (int k = 0; k < r; ++k) total *= q;
                if (total > 81) continue;
                long long units = 0;
                for (long long code = 0; code < total; ++code) {
                    std::vector<int> c(r);
                    long long x = code;
                    for (int k = 0; k < r; ++k, x /= q) c[k] = static_cast<int>(x % q);
                    TruncatedSeries s(F, c);
                    if (!s.is_unit()) continue;
                    ++units;
                    CHECK(s * s.inv() == TruncatedSeries::constant(F, r, 1));
                }
                long long expect = q - 1;
                for (int k = 1; k < r; ++k) expect *= q;
                CHECK(units == expect);
            }
        }
    }

    TEST_CASE("ring axioms on random triples")
    {
        const Field& F = Field::get(2, 2);
        uint32_t s = 12345;
        auto next = [&]() {
            s = s * 1664525u + 1013904223u;
            return static_cast<int>((s >> 16) % 4);
        };
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<int> a(4), b(4), c(4);
            for (int k = 0; k < 4; ++k) {
                a[k] = next();
                b[k] = next();
                c[k] = next();
            }
            TruncatedSeries A(F, a), B(F, b), C(F, c);
            CHECK((A * B) * C == A * (B * C));
            CHECK(A * (B + C) == A * B + A * C);
            CHECK(A * B == B * A);
            CHECK(A - A == TruncatedSeries(F, 4));
        }
    }

    TEST_CASE("coefficient Frobenius")
    {
        const Field& F = Field::get(3, 2);
        TruncatedSeries rational(F, {1, 2, 0});
        CHECK(coeff_frobenius(rational, 1, 1) == rational);
        TruncatedSeries f(F, {0, 5, 7});
        CHECK(coeff_frobenius(coeff_frobenius(f, 1, 1), 1, 1) == f);
        CHECK(coeff_frobenius(f, 1, 1).valuation() == f.valuation());
        CHECK(coeff_frobenius(f, 1, 1) != f);
    }
}
