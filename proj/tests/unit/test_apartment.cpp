#include "doctest.h"

#include <set>

#include "dlpar/apartment.hpp"
#include "dlpar/errors.hpp"

using namespace dlpar;

namespace {

RatVec simple_coroot_point(const RootDatum& D, const RatVec& c)
{
    RatVec x(D.dim(), Rat(0));
    for (int i = 0; i < D.rank(); ++i)
        for (int k = 0; k < D.dim(); ++k) x[k] += c[i] * Rat(D.coroot(D.simple()[i])[k]);
    return x;
}

int highest_root(const RootDatum& D)
{
    int best = -1;
    for (int a : D.positive_roots())
        if (best < 0 || D.height(a) > D.height(best)) best = a;
    return best;
}

const WeylElement& three_cycle(const RootDatum& D)
{
    for (const auto& w : D.weyl_elements()) {
        IVec e1{1, 0, 0};
        if (D.act_cochar(w, e1) == IVec{0, 1, 0} && D.act_cochar(w, IVec{0, 1, 0}) == IVec{0, 0, 1}) return w;
    }
    FAIL("no 3-cycle");
    return D.weyl_elements().front();
}

}  // namespace

TEST_SUITE("apartment")
{
    TEST_CASE("hyperspecial profile")
    {
        for (const char* f : {"A1", "A2", "C2", "G2"}) {
            RootDatum D = RootDatum::build(f);
            auto P = profile(D, RatVec(D.dim(), Rat(0)));
            CHECK(P.s() == 0);
            CHECK(P.jumps == std::vector<Rat>{Rat(1)});
            for (int a = 0; a < D.num_roots(); ++a) {
                CHECK(P.red(a));
                CHECK(P.m(a) == 0);
            }
            CHECK(check_eps_ms(D, P).violations.empty());
        }
    }

    TEST_CASE("A1 Iwahori midpoint")
    {
        RootDatum D = RootDatum::build("A1");
        auto P = profile(D, simple_coroot_point(D, {Rat(1, 4)}));
        int a = D.simple()[0];
        int na = D.neg(a);
        CHECK(D.pair(D.root(a), P.v) == Rat(1, 2));
        CHECK(P.m(a) == 0);
        CHECK(P.eps(a) == Rat(1, 2));
        CHECK(P.m(na) == 1);
        CHECK(P.eps(na) == Rat(1, 2));
        CHECK(P.jumps == std::vector<Rat>{Rat(1, 2), Rat(1)});
        CHECK(P.s() == 1);
        auto rep = check_eps_ms(D, P);
        CHECK(rep.instances == 0);
        CHECK(rep.violations.empty());
    }

    TEST_CASE("GL3 Iwahori profile")
    {
        RootDatum D = RootDatum::build("GL", 3);
        RatVec v{Rat(0), Rat(-1, 3), Rat(-2, 3)};
        auto P = profile(D, v);
        for (int a = 0; a < D.num_roots(); ++a) {
            CHECK_FALSE(P.red(a));
            CHECK((P.eps(a) == Rat(1, 3) || P.eps(a) == Rat(2, 3)));
        }
        CHECK(P.s() == 2);
        CHECK(P.jumps == std::vector<Rat>{Rat(1, 3), Rat(2, 3), Rat(1)});
    }

    TEST_CASE("C2 with a half-integral pairing")
    {
        RootDatum D = RootDatum::build("C2");
        int a = D.find({1, -1});
        int b = D.find({0, 2});
        RatVec v = point_from_simple_pairings(D, {D.simple()[0] == a ? Rat(1, 2) : Rat(0), D.simple()[0] == a ? Rat(0) : Rat(1, 2)});
        CHECK(D.pair(D.root(a), v) == Rat(1, 2));
        CHECK(D.pair(D.root(b), v) == Rat(0));
        auto rep = check_eps_ms(D, profile(D, v));
        CHECK(rep.violations.empty());
        CHECK(rep.floor_positive > 0);
    }

    TEST_CASE("affine index")
    {
        RootDatum D = RootDatum::build("A1");
        auto H = profile(D, RatVec(2, Rat(0)));
        auto I = profile(D, simple_coroot_point(D, {Rat(1, 4)}));
        for (int a = 0; a < 2; ++a) {
            CHECK(affine_index(H, a, 1, 2) == H.m(a) + 1);
            CHECK(affine_index(I, a, 1, 2) == I.m(a));
            CHECK(affine_index(H, a, 0, 2) == H.m(a));
            CHECK(affine_index(I, a, 0, 2) == I.m(a));
        }
        CHECK_THROWS_AS(affine_index(H, 0, 3, 2), DomainError);
    }

    TEST_CASE("affine Frobenius")
    {
        RootDatum D = RootDatum::build("GL", 3);
        auto id = untwisted_frobenius(D, 2);
        for (int a = 0; a < D.num_roots(); ++a) {
            AffineRoot psi{a, 3};
            CHECK(affine_frobenius(D, id, psi) == psi);
        }

        TwistedFrobenius sigma;
        sigma.q = 2;
        sigma.action = three_cycle(D);
        sigma.shift = {Rat(1), Rat(0), Rat(0)};
        int a = D.find({1, -1, 0});
        AffineRoot psi{a, 0};
        AffineRoot img = affine_frobenius(D, sigma, psi);
        CHECK(img.alpha == sigma.action.perm[a]);
        CHECK(img.m == -D.pair(D.root(img.alpha), sigma.shift).numerator());
        std::set<std::pair<int, long long>> orbit;
        AffineRoot cur = psi;
        for (int k = 0; k < 3; ++k) {
            orbit.insert({cur.alpha, cur.m});
            cur = affine_frobenius(D, sigma, cur);
        }
        CHECK(cur == psi);
        CHECK(orbit.size() == 3);

        TwistedFrobenius bad = sigma;
        bad.shift = {Rat(1, 2), Rat(1, 2), Rat(0)};
        CHECK_THROWS_AS(affine_frobenius(D, bad, psi), ConfigError);
    }

    TEST_CASE("Frobenius commutes with evaluation on stable points")
    {
        RootDatum D = RootDatum::build("GL", 3);
        TwistedFrobenius sigma;
        sigma.q = 3;
        sigma.action = three_cycle(D);
        sigma.shift = {Rat(1), Rat(0), Rat(0)};
        // the barycenter of the alcove is stable under the twist
        RatVec v{Rat(0), Rat(-1, 3), Rat(-2, 3)};
        REQUIRE(is_sigma_stable(D, sigma, v));
        CHECK_FALSE(is_sigma_stable(D, sigma, RatVec{Rat(0), Rat(0), Rat(-1, 2)}));
        for (int a = 0; a < D.num_roots(); ++a)
            for (long long m = -2; m <= 2; ++m) {
                AffineRoot psi{a, m};
                AffineRoot img = affine_frobenius(D, sigma, psi);
                CHECK(evaluate(D, img, frobenius_point(D, sigma, v)) == evaluate(D, psi, v));
            }
        CHECK(evaluate(D, {D.find({1, -1, 0}), 0}, v) == Rat(1, 3));
    }

    TEST_CASE("profile symmetries across the alcove sweep")
    {
        for (const char* f : {"A1", "A2", "A3", "C2", "G2"}) {
            RootDatum D = RootDatum::build(f);
            int hi = highest_root(D);
            for (const auto& v : alcove_points(D, 6)) {
                for (int s : D.simple()) CHECK(D.pair(D.root(s), v) >= Rat(0));
                CHECK(D.pair(D.root(hi), v) <= Rat(1));
                auto P = profile(D, v);
                for (int a = 0; a < D.num_roots(); ++a) {
                    if (P.red(a))
                        CHECK(P.eps(D.neg(a)) == Rat(0));
                    else
                        CHECK(P.eps(a) + P.eps(D.neg(a)) == Rat(1));
                }
                int s = P.s();
                for (int i = 1; i <= s; ++i) CHECK(P.jump(i) == Rat(1) - P.jump(s + 1 - i));
                CHECK(P.jump(s + 1) == Rat(1));
                CHECK(check_eps_ms(D, P).violations.empty());
            }
        }
    }

    TEST_CASE("alcove point count in rank one")
    {
        // Farey fractions in [0, 1] with denominator at most 6
        RootDatum D = RootDatum::build("A1");
        CHECK(alcove_points(D, 6).size() == 13);
        CHECK(alcove_points(D, 1).size() == 2);
    }
}
