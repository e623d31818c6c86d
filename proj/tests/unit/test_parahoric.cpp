#include "doctest.h"

#include <random>

#include "dlpar/errors.hpp"
#include "dlpar/parahoric.hpp"

using namespace dlpar;

namespace {

GroupSpec spec(const std::string& family, int n, int q, int r, RatVec x = {}, int ambient = 1)
{
    GroupSpec s;
    s.family = family;
    s.n = n;
    s.q = q;
    s.r = r;
    s.x = std::move(x);
    s.ambient = ambient;
    return s;
}

RatVec iwahori2() { return {Rat(1, 4), Rat(-1, 4)}; }

long long order_of(const GroupSpec& s)
{
    GroupModel M(s);
    return static_cast<long long>(M.enumerate(Descriptor::G(0), 1).size());
}

TruncatedSeries series(const GroupModel& M, std::vector<int> c)
{
    c.resize(M.L(), 0);
    return TruncatedSeries(M.field(), c);
}

}  // namespace

TEST_SUITE("parahoric")
{
    TEST_CASE("group orders")
    {
        // |GL_2(F_q[t]/t^2)| = q^4 |GL_2(F_q)|, |SL_2(F_q[t]/t^2)| = q^3 |SL_2(F_q)|
        CHECK(order_of(spec("GL", 2, 2, 2)) == 96);
        CHECK(order_of(spec("GL", 2, 3, 2)) == 3888);
        CHECK(order_of(spec("SL", 2, 2, 2)) == 48);
        CHECK(order_of(spec("SL", 2, 3, 2)) == 648);
        CHECK(order_of(spec("GL", 2, 3, 1)) == 48);
        CHECK(order_of(spec("GL", 3, 2, 1)) == 168);
        CHECK(order_of(spec("Sp", 4, 2, 1)) == 720);
        // reductive quotient at the non-special vertex is SL_2 x SL_2
        CHECK(order_of(spec("Sp", 4, 2, 1, {Rat(1, 2), Rat(0)})) == 36);
        // Iwahori: torus (q-1)q per factor, one coefficient per root
        CHECK(order_of(spec("SL", 2, 2, 2, iwahori2())) == 8);
        CHECK(order_of(spec("SL", 2, 3, 2, iwahori2())) == 54);
        CHECK(order_of(spec("GL", 2, 3, 2, iwahori2())) == 324);
        CHECK(order_of(spec("GL", 3, 2, 2, {Rat(0), Rat(-1, 3), Rat(-2, 3)})) == 512);
    }

    TEST_CASE("subgroup orders")
    {
        GroupModel M(spec("GL", 2, 3, 2));
        int a = M.datum().find({1, -1});
        CHECK(M.enumerate(Descriptor::T(0), 1).size() == 36);
        CHECK(M.enumerate(Descriptor::Top(), 1).size() == 9);
        CHECK(M.enumerate(Descriptor::U(a, 0), 1).size() == 9);
        CHECK(M.enumerate(Descriptor::U(a, 1), 1).size() == 3);
        CHECK(M.enumerate(Descriptor::G(1), 1).size() == 81);
        CHECK(M.enumerate(Descriptor::G(2), 1).size() == 1);
        GroupModel S(spec("SL", 2, 3, 2));
        CHECK(S.enumerate(Descriptor::T(0), 1).size() == 6);
        CHECK(S.enumerate(Descriptor::Top(), 1).size() == 3);
    }

    TEST_CASE("GL3 Iwahori pattern shape")
    {
        GroupModel M(spec("GL", 3, 2, 2, {Rat(0), Rat(-1, 3), Rat(-2, 3)}));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(M.theta(i, j) - M.tau0(i, j) == (i == j ? 2 : 1));
    }

    TEST_CASE("generator closure equals the pattern")
    {
        std::vector<GroupSpec> configs{spec("SL", 2, 2, 2), spec("GL", 2, 2, 2, iwahori2()), spec("SL", 2, 3, 2, iwahori2()),
                                       spec("Sp", 4, 2, 1)};
        for (const auto& s : configs) {
            GroupModel M(s);
            std::vector<Descriptor> ds{Descriptor::G(0), Descriptor::G(1), Descriptor::T(0), Descriptor::T(1)};
            for (int a = 0; a < M.datum().num_roots(); ++a) ds.push_back(Descriptor::U(a, 0));
            for (const auto& d : ds) {
                CAPTURE(d.label());
                auto pattern = M.enumerate_pattern(M.levels(d), 1);
                auto closure = M.enumerate_closure(M.generators(d, 1));
                CHECK(pattern == closure);
            }
        }
    }

    TEST_CASE("root elements")
    {
        GroupModel G(spec("GL", 2, 3, 2));
        int a = G.datum().find({1, -1});
        CHECK(G.root_element(a, series(G, {})) == G.identity());
        GroupElement u = G.root_element(a, series(G, {0, 1}));
        CHECK(G.entry(u, 0, 1) == series(G, {0, 1}));
        CHECK(G.entry(u, 1, 0) == series(G, {}));
        CHECK(G.entry(u, 0, 0) == series(G, {1}));

        GroupModel S(spec("SL", 2, 2, 2, iwahori2()));
        int na = S.datum().find({-1, 1});
        CHECK(S.prof().m(na) == 1);
        CHECK_THROWS_AS(S.root_element(na, series(S, {1})), MembershipError);
        GroupElement v = S.root_element(na, series(S, {0, 1}));
        CHECK(S.in_group(v));
        CHECK(S.member(v, Descriptor::U(na, 0)));
        // non-reductive root groups already lie in G^1
        CHECK(S.member(v, Descriptor::U(na, 1)));
        CHECK_FALSE(S.member(v, Descriptor::U(na, 2)));
    }

    TEST_CASE("root elements leave the filtration at the affine index")
    {
        GroupModel S(spec("SL", 2, 3, 3, iwahori2()));
        for (int al = 0; al < S.datum().num_roots(); ++al)
            for (int a = 0; a < S.r(); ++a) {
                int k = affine_index(S.prof(), al, a, S.r());
                std::vector<int> c(S.L(), 0);
                if (k >= S.L()) continue;
                c[k] = 1;
                GroupElement u = S.root_element(al, TruncatedSeries(S.field(), c));
                CHECK(S.member(u, Descriptor::U(al, a)));
                // U^a = U^{a+1} when both have the same affine index (a = 0, non-reductive)
                bool same = affine_index(S.prof(), al, a + 1, S.r()) == k;
                CHECK(S.member(u, Descriptor::U(al, a + 1)) == same);
                if (same) CHECK(a == 0);
            }
    }

    TEST_CASE("inverses, Frobenius fixed points and JSON round trips")
    {
        GroupModel M(spec("GL", 2, 2, 2, {}, 2));
        auto G1 = M.enumerate(Descriptor::G(0), 1);
        auto G2 = M.enumerate(Descriptor::G(0), 2);
        CHECK(G1.size() == 96);
        long long fixed = 0;
        for (const auto& g : G2) {
            if (M.frobenius(g) == g) {
                ++fixed;
                CHECK(G1.count(g) == 1);
            }
            CHECK(M.frobenius(g, 2) == g);
        }
        CHECK(fixed == 96);
        for (const auto& g : G1) {
            CHECK(M.mul(g, M.inv(g)) == M.identity());
            CHECK(M.from_json(M.to_json(g)) == g);
            CHECK(M.field_level(g) == 1);
        }
        CHECK_THROWS_AS(M.from_json(M.to_json(M.zero_matrix())), MembershipError);
    }

    TEST_CASE("canonical form is a right coset invariant")
    {
        GroupModel M(spec("GL", 2, 3, 2, iwahori2()));
        std::vector<GroupElement> G;
        for (const auto& g : M.enumerate(Descriptor::G(0), 1)) G.push_back(g);
        std::sort(G.begin(), G.end());
        std::mt19937 rng(7);
        for (int trial = 0; trial < 500; ++trial) {
            const GroupElement& g = G[rng() % G.size()];
            GroupElement k = M.identity();
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int c = M.theta(i, j); c < M.L(); ++c) k.c[(i * 2 + j) * M.L() + c] = rng() % 3;
            CHECK(M.canonical(M.canonical(g)) == M.canonical(g));
            CHECK(M.canonical(M.mul(g, k)) == g);
        }
    }

    TEST_CASE("Bruhat cells partition the group")
    {
        for (int q : {2, 3}) {
            GroupModel M(spec("GL", 2, q, 2));
            std::vector<long long> cells(M.weyl_x().size(), 0);
            for (const auto& g : M.enumerate(Descriptor::G(0), 1)) ++cells.at(M.bruhat_component(g));
            long long total = 0;
            for (auto c : cells) total += c;
            CHECK(total == (q == 2 ? 96 : 3888));
            // the big cell has q times the image of B in G_1, the small cell B itself
            long long b1 = static_cast<long long>(q - 1) * (q - 1) * q;
            CHECK(cells[0] == b1 * q * q * q * q);
            GroupElement w = M.zero_matrix();
            w.c[(0 * 2 + 1) * M.L()] = 1;
            w.c[(1 * 2 + 0) * M.L()] = 1;
            CHECK(M.bruhat_component(M.identity()) == 0);
            CHECK(M.bruhat_component(w) != 0);
        }
    }

    TEST_CASE("Iwahori decomposition recomposes")
    {
        GroupModel S(spec("SL", 2, 3, 2, iwahori2()));
        auto pos = S.standard_positive();
        auto neg = S.opposite(pos);
        for (const auto& g : S.enumerate(Descriptor::G(0), 1)) {
            auto parts = S.iwahori_decompose(g, 0);
            CHECK(S.mul(S.mul(parts.lower, parts.torus), parts.upper) == g);
            CHECK(S.member(parts.lower, Descriptor::N(neg, 0)));
            CHECK(S.member(parts.torus, Descriptor::T(0)));
            CHECK(S.member(parts.upper, Descriptor::N(pos, 0)));
        }
        auto id = S.iwahori_decompose(S.identity(), 1);
        CHECK(id.lower == S.identity());
        CHECK(id.torus == S.identity());
        CHECK(id.upper == S.identity());
    }

    TEST_CASE("single-root stratum and trivial lambda")
    {
        GroupModel S(spec("SL", 2, 2, 2, iwahori2()));
        auto pos = S.standard_positive();
        REQUIRE(pos.size() == 1);
        int b = pos[0];
        std::vector<int> c(S.L(), 0);
        c[affine_index(S.prof(), b, 1, S.r())] = 1;
        GroupElement z = S.root_element(b, TruncatedSeries(S.field(), c));
        Stratum st = S.stratum(z, pos, pos);
        CHECK(st.a == 1);
        CHECK(st.I == std::vector<int>{b});
        auto lam = S.lambda_eval(z, S.identity(), S.datum().neg(b), pos);
        CHECK(lam.member);
        CHECK(lam.torus_part == S.identity());
    }

    TEST_CASE("descriptors are Frobenius compatible")
    {
        GroupModel M(spec("GL", 2, 2, 2, iwahori2(), 2));
        std::vector<Descriptor> ds{Descriptor::G(0), Descriptor::G(1), Descriptor::T(1), Descriptor::U(0, 0)};
        auto G2 = M.enumerate(Descriptor::G(0), 2);
        for (const auto& d : ds)
            for (const auto& g : G2) CHECK(M.member(g, d) == M.member(M.frobenius(g), M.sigma(M.levels(d))));
    }
}
