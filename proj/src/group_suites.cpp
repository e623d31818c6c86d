#include "dlpar/group_suites.hpp"

#include <algorithm>

namespace dlpar {

void SuiteReport::fail(nlohmann::json j)
{
    ++failures;
    if (samples.size() < 10) samples.push_back(std::move(j));
}

nlohmann::json SuiteReport::to_json() const
{
    return {{"name", name}, {"checks", checks}, {"failures", failures}, {"samples", samples}};
}

namespace {

std::vector<GroupElement> as_vector(const ElementSet& s)
{
    std::vector<GroupElement> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
}

// roots of w(Phi^-) with Phi^- opposite the standard system
std::vector<int> twisted_negative(const GroupModel& M, int w)
{
    std::vector<int> out;
    for (int b : M.opposite(M.standard_positive())) out.push_back(M.weyl_x()[w].perm[b]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> three_orders(const GroupModel& M, const std::vector<int>& sys)
{
    std::vector<int> up = sys;
    std::stable_sort(up.begin(), up.end(),
                     [&](int a, int b) { return M.datum().height(a, sys) < M.datum().height(b, sys); });
    std::vector<int> down(up.rbegin(), up.rend());
    std::vector<int> mixed = sys;
    if (mixed.size() > 1) std::rotate(mixed.begin(), mixed.begin() + 1, mixed.end());
    return {up, down, mixed};
}

}  // namespace

SuiteReport suite_commutator_vanishing(const GroupModel& M, int n)
{
    SuiteReport rep;
    rep.name = "commutator_vanishing";
    const int r = M.r();
    for (int a = 1; a <= r - 1; ++a)
        for (int alpha = 0; alpha < M.datum().num_roots(); ++alpha) {
            bool red = M.prof().red(alpha);
            auto xis = as_vector(M.enumerate_pattern(M.levels(Descriptor::U(alpha, r - a)), n));
            auto gens = M.generators(Descriptor::G(red ? a : a + 1), n);
            for (const auto& xi : xis)
                for (const auto& x : gens) {
                    ++rep.checks;
                    if (!M.is_identity(M.commutator(xi, x)))
                        rep.fail({{"a", a}, {"alpha", root_str(M.datum().root(alpha))}, {"xi", M.to_json(xi)}, {"x", M.to_json(x)}});
                }
        }
    return rep;
}

SuiteReport suite_jump_normality(const GroupModel& M, int n)
{
    SuiteReport rep;
    rep.name = "jump_normality";
    const int r = M.r(), s = M.prof().s();
    if (r < 2) return rep;
    auto g1 = M.generators(Descriptor::G(1), n);
    for (int i = 1; i <= s + 1; ++i) {
        Levels H = M.levels(Descriptor::Gai(1, i));
        Levels next = M.levels(Descriptor::Gai(1, i + 1));
        auto gh = M.generators(H, n);
        for (const auto& y : g1)
            for (const auto& h : gh) {
                ++rep.checks;
                if (!M.member(M.mul(M.mul(M.inv(y), h), y), H))
                    rep.fail({{"kind", "normal"}, {"i", i}, {"y", M.to_json(y)}, {"h", M.to_json(h)}});
            }
        for (const auto& h : gh)
            for (const auto& k : gh) {
                ++rep.checks;
                if (!M.member(M.commutator(h, k), next))
                    rep.fail({{"kind", "abelian"}, {"i", i}, {"h", M.to_json(h)}, {"k", M.to_json(k)}});
            }
    }
    for (int a = 2; a <= r - 1; ++a) {
        auto ga = M.generators(Descriptor::G(a), n);
        Levels up = M.levels(Descriptor::G(a + 1));
        for (const auto& h : ga)
            for (const auto& k : ga) {
                ++rep.checks;
                if (!M.member(M.commutator(h, k), up))
                    rep.fail({{"kind", "abelian_level"}, {"a", a}, {"h", M.to_json(h)}, {"k", M.to_json(k)}});
            }
    }
    return rep;
}

SuiteReport suite_bruhat_factorization(const GroupModel& M)
{
    SuiteReport rep;
    rep.name = "bruhat_factorization";
    auto pos = M.standard_positive();
    auto G = as_vector(M.enumerate_pattern(M.levels(Descriptor::G(0)), 1));
    auto U = as_vector(M.enumerate_pattern(M.levels(Descriptor::N(pos, 0)), 1));
    Levels Up = M.levels(Descriptor::N(pos, 0)), T = M.levels(Descriptor::T(0));
    std::vector<Levels> K;
    for (size_t w = 0; w < M.weyl_x().size(); ++w) K.push_back(M.levels(Descriptor::K1(pos, static_cast<int>(w))));
    for (const auto& g : G) {
        ++rep.checks;
        int w = M.bruhat_component(g);
        const GroupElement& wd = M.weyl_rep(w);
        GroupElement wi = M.inv(wd);
        bool found = false;
        for (const auto& u : U) {
            GroupElement y = M.mul(M.mul(wi, M.inv(u)), g);
            IwahoriParts f;
            if (!M.ldu(y, f)) continue;
            GroupElement z = M.mul(M.mul(wd, f.lower), wi);
            if (!M.member(z, K[w]) || !M.member(f.torus, T) || !M.member(f.upper, Up)) continue;
            GroupElement back = M.mul(M.mul(M.mul(M.mul(u, z), wd), f.torus), f.upper);
            if (back == g) {
                found = true;
                break;
            }
        }
        if (!found) rep.fail({{"g", M.to_json(g)}, {"w", w}});
    }
    return rep;
}

SuiteReport suite_stratum_orders(const GroupModel& M)
{
    SuiteReport rep;
    rep.name = "stratum_orders";
    if (M.r() < 2) return rep;
    auto pos = M.standard_positive();
    for (size_t w = 0; w < M.weyl_x().size(); ++w) {
        auto sys = twisted_negative(M, static_cast<int>(w));
        auto orders = three_orders(M, sys);
        auto K = as_vector(M.enumerate_pattern(M.levels(Descriptor::K1(pos, static_cast<int>(w))), 1));
        for (const auto& z : K) {
            if (M.is_identity(z)) continue;
            ++rep.checks;
            Stratum s0 = M.stratum(z, sys, orders[0]);
            bool ok = !s0.A.empty() && !s0.I.empty() && s0.moreover;
            for (size_t k = 1; k < orders.size(); ++k)
                if (!(M.stratum(z, sys, orders[k]) == s0)) ok = false;
            if (!ok) rep.fail({{"z", M.to_json(z)}, {"w", w}, {"a", s0.a}, {"A", s0.A}});
        }
    }
    return rep;
}

SuiteReport suite_torus_commutator(const GroupModel& M)
{
    SuiteReport rep;
    rep.name = "torus_commutator";
    const int r = M.r();
    if (r < 2) return rep;
    auto pos = M.standard_positive();
    for (size_t w = 0; w < M.weyl_x().size(); ++w) {
        auto sys = twisted_negative(M, static_cast<int>(w));
        auto K = as_vector(M.enumerate_pattern(M.levels(Descriptor::K1(pos, static_cast<int>(w))), 1));
        for (const auto& z : K) {
            if (M.is_identity(z)) continue;
            Stratum st = M.stratum(z, sys, sys);
            for (int b : st.I) {
                int alpha = M.datum().neg(b);
                int lev = M.prof().red(b) ? r - st.a - 1 : r - st.a;
                auto xis = as_vector(M.enumerate_pattern(M.levels(Descriptor::U(alpha, lev)), 1));
                size_t target = M.enumerate_pattern(M.levels(Descriptor::TopAlpha(alpha)), 1).size();
                Levels finer = M.levels(Descriptor::U(alpha, lev + 1));
                std::vector<GroupElement> proj;
                for (const auto& xi : xis) {
                    ++rep.checks;
                    LambdaResult L = M.lambda_eval(z, xi, alpha, sys);
                    if (!L.member) rep.fail({{"kind", "membership"}, {"z", M.to_json(z)}, {"xi", M.to_json(xi)}});
                    proj.push_back(L.torus_part);
                }
                // fibres of the projection are exactly the cosets of the next filtration step
                for (size_t u = 0; u < xis.size(); ++u)
                    for (size_t v = u + 1; v < xis.size(); ++v) {
                        bool same = proj[u] == proj[v];
                        bool coset = M.member(M.mul(M.inv(xis[u]), xis[v]), finer);
                        ++rep.checks;
                        if (same != coset)
                            rep.fail({{"kind", "fibre"}, {"z", M.to_json(z)}, {"xi", M.to_json(xis[u])}, {"xi2", M.to_json(xis[v])}});
                    }
                std::vector<GroupElement> img = proj;
                std::sort(img.begin(), img.end());
                img.erase(std::unique(img.begin(), img.end()), img.end());
                ++rep.checks;
                if (img.size() != target)
                    rep.fail({{"kind", "image"}, {"z", M.to_json(z)}, {"image", img.size()}, {"target", target}});
            }
        }
    }
    return rep;
}

}  // namespace dlpar
