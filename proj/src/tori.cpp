#include "dlpar/tori.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "dlpar/errors.hpp"

namespace dlpar {

GroupElement RationalTorus::sigma_split(const GroupModel& M, const GroupElement& s) const
{
    return M.mul(M.mul(n0, M.frobenius(s)), M.inv(n0));
}

nlohmann::json RationalTorus::to_json(const GroupModel& M) const
{
    return {{"label", label}, {"w", w}, {"level", level}, {"h", M.to_json(h)}, {"n0", M.to_json(n0)},
            {"order", size()}, {"generator_orders", orders}, {"exponent", exponent}};
}

int weyl_order(const GroupModel& M, int w)
{
    const auto& W = M.weyl_x();
    WeylElement cur = W[w];
    int n = 1;
    while (cur.matrix != W[0].matrix) {
        cur = M.datum().compose(W[w], cur);
        ++n;
    }
    return n;
}

std::vector<int> weyl_class_reps(const GroupModel& M)
{
    const auto& W = M.weyl_x();
    std::vector<int> cls(W.size(), -1), reps;
    auto inverse = [&](int v) {
        for (size_t u = 0; u < W.size(); ++u)
            if (M.datum().compose(W[u], W[v]).matrix == W[0].matrix) return static_cast<int>(u);
        throw std::logic_error("Weyl element without inverse");
    };
    for (size_t w = 0; w < W.size(); ++w) {
        if (cls[w] >= 0) continue;
        reps.push_back(static_cast<int>(w));
        for (size_t v = 0; v < W.size(); ++v) {
            WeylElement c = M.datum().compose(M.datum().compose(W[v], W[w]), W[inverse(static_cast<int>(v))]);
            for (size_t u = 0; u < W.size(); ++u)
                if (W[u].matrix == c.matrix) cls[u] = static_cast<int>(w);
        }
    }
    return reps;
}

namespace {

std::vector<TruncatedSeries> units(const GroupModel& M, int n)
{
    const auto& F = M.field();
    const auto& vals = M.subfield(n);
    std::vector<TruncatedSeries> out;
    std::vector<int> c(M.r(), 0);
    std::vector<size_t> idx(M.r(), 0);
    while (true) {
        if (c[0] != 0) out.emplace_back(F, c);
        size_t k = 0;
        for (; k < idx.size(); ++k) {
            if (++idx[k] < vals.size()) {
                c[k] = vals[idx[k]];
                break;
            }
            idx[k] = 0;
            c[k] = vals[0];
        }
        if (k == idx.size()) break;
    }
    return out;
}

long long element_order(const GroupModel& M, const GroupElement& x)
{
    GroupElement id = M.identity(), cur = x;
    long long n = 1;
    while (cur != id) {
        cur = M.mul(cur, x);
        ++n;
    }
    return n;
}

void abelian_basis(const GroupModel& M, RationalTorus& T)
{
    const auto& E = T.split_points;
    long long total = static_cast<long long>(E.size());
    std::vector<long long> ord;
    for (const auto& x : E) ord.push_back(element_order(M, x));
    std::vector<long long> primes;
    for (long long p = 2, m = total; m > 1; ++p)
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    for (long long p : primes) {
        auto is_ppow = [&](long long o) {
            while (o % p == 0) o /= p;
            return o == 1;
        };
        std::vector<GroupElement> S;
        for (size_t i = 0; i < E.size(); ++i)
            if (is_ppow(ord[i])) S.push_back(E[i]);
        ElementSet H = {M.identity()};
        while (H.size() < S.size()) {
            // an element of maximal order modulo H
            int best = -1;
            long long bm = 0;
            for (size_t i = 0; i < S.size(); ++i) {
                GroupElement cur = S[i];
                long long m = 1;
                while (!H.count(cur)) {
                    cur = M.mul(cur, S[i]);
                    ++m;
                }
                if (m > bm) {
                    bm = m;
                    best = static_cast<int>(i);
                }
            }
            GroupElement x = S[best];
            // correct by an element of H so that the order drops to bm
            GroupElement chosen;
            bool found = false;
            std::vector<GroupElement> Hs(H.begin(), H.end());
            std::sort(Hs.begin(), Hs.end());
            for (const auto& h : Hs) {
                GroupElement y = M.mul(x, h);
                if (M.is_identity(M.pow(y, bm))) {
                    chosen = y;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("abelian basis correction failed");
            ElementSet H2;
            GroupElement pw = M.identity();
            for (long long j = 0; j < bm; ++j) {
                for (const auto& h : H) H2.insert(M.mul(h, pw));
                pw = M.mul(pw, chosen);
            }
            H = std::move(H2);
            T.gens.push_back(chosen);
            T.orders.push_back(static_cast<int>(bm));
        }
    }
    T.exponent = 1;
    for (int o : T.orders) T.exponent = static_cast<int>(lcm_ll(T.exponent, o));
    // discrete logarithms by enumerating exponent vectors
    std::vector<int> e(T.gens.size(), 0);
    std::vector<GroupElement> pows;
    while (true) {
        GroupElement x = M.identity();
        for (size_t i = 0; i < e.size(); ++i) x = M.mul(x, M.pow(T.gens[i], e[i]));
        T.log[x] = e;
        size_t k = 0;
        for (; k < e.size(); ++k) {
            if (++e[k] < T.orders[k]) break;
            e[k] = 0;
        }
        if (k == e.size()) break;
    }
    if (static_cast<long long>(T.log.size()) != total) throw std::logic_error("discrete logarithm table incomplete");
}

}  // namespace

RationalTorus realize_torus(const GroupModel& M, int w, long long budget)
{
    if (M.has_twist()) throw ConfigError("tori are modelled for untwisted Frobenius only");
    if (w < 0 || w >= static_cast<int>(M.weyl_x().size())) throw DomainError("Weyl index out of range");
    RationalTorus T;
    T.w = w;
    T.level = weyl_order(M, w);
    T.label = w == 0 ? "split" : "w" + std::to_string(w);
    if (M.ambient() % T.level != 0)
        throw ConfigError("ambient level " + std::to_string(M.ambient()) + " cannot hold F_{q^" + std::to_string(T.level) + "}");
    const int n = M.size(), L = M.L();
    const GroupElement& wd = M.weyl_rep(w);
    GroupElement wdi = M.inv(wd);
    if (w == 0) {
        T.h = M.identity();
    } else {
        std::vector<int> slots;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i == j || M.prof().red(M.root_at(i, j))) slots.push_back((i * n + j) * L);
        const auto& vals = M.subfield(T.level);
        std::vector<size_t> idx(slots.size(), 0);
        GroupElement h = M.zero_matrix();
        long long scanned = 0;
        bool found = false;
        while (!found) {
            if (++scanned > budget) throw ResourceError("Lang search exceeded the budget of " + std::to_string(budget), 0);
            if (M.in_group(h)) {
                GroupElement y = M.mul(wdi, M.mul(M.inv(h), M.frobenius(h)));
                if (M.is_diagonal(y) && M.in_group(y)) {
                    T.h = h;
                    found = true;
                    break;
                }
            }
            size_t k = 0;
            for (; k < slots.size(); ++k) {
                if (++idx[k] < vals.size()) {
                    h.c[slots[k]] = vals[idx[k]];
                    break;
                }
                idx[k] = 0;
                h.c[slots[k]] = vals[0];
            }
            if (k == slots.size()) break;
        }
        if (!found) throw ResourceError("Lang search exhausted over F_{q^" + std::to_string(T.level) + "}", 0);
    }
    T.hinv = M.inv(T.h);
    T.n0 = M.mul(T.hinv, M.frobenius(T.h));
    // split torus over F_{q^level}, then sigma-fixed points
    auto us = units(M, T.level);
    const auto& basis = M.torus_basis();
    std::vector<GroupElement> all = {M.identity()};
    for (const auto& lam : basis) {
        std::vector<GroupElement> next;
        for (const auto& x : all)
            for (const auto& u : us) next.push_back(M.mul(x, M.cochar_element(lam, u)));
        all = std::move(next);
    }
    for (const auto& s : all)
        if (T.sigma_split(M, s) == s) T.split_points.push_back(s);
    std::sort(T.split_points.begin(), T.split_points.end());
    T.split_points.erase(std::unique(T.split_points.begin(), T.split_points.end()), T.split_points.end());
    abelian_basis(M, T);
    return T;
}

std::vector<Character> characters_of(const RationalTorus& T)
{
    std::vector<Character> out;
    std::vector<int> e(T.orders.size(), 0);
    while (true) {
        out.push_back({e});
        size_t k = 0;
        for (; k < e.size(); ++k) {
            if (++e[k] < T.orders[k]) break;
            e[k] = 0;
        }
        if (k == e.size()) break;
    }
    return out;
}

long long value_exponent(const RationalTorus& T, const Character& c, const GroupElement& split)
{
    auto it = T.log.find(split);
    if (it == T.log.end()) throw DomainError("element is not a rational point of the torus");
    long long k = 0;
    for (size_t i = 0; i < c.exps.size(); ++i)
        k += static_cast<long long>(c.exps[i]) * it->second[i] * (T.exponent / T.orders[i]);
    return ((k % T.exponent) + T.exponent) % T.exponent;
}

Cyclo value(const RationalTorus& T, const Character& c, const GroupElement& split)
{
    return Cyclo::zeta(T.exponent, value_exponent(T, c, split));
}

nlohmann::json character_json(const Character& c) { return c.exps; }

nlohmann::json RegularityReport::to_json(const GroupModel& M) const
{
    nlohmann::json j = {{"regular", regular}, {"tested_m", tested_m}, {"skipped_m", skipped_m}};
    if (failing_root >= 0) j["failing_root"] = root_str(M.datum().root(failing_root));
    return j;
}

RegularityReport is_regular(const GroupModel& M, const RationalTorus& T, const Character& c)
{
    RegularityReport rep;
    rep.regular = true;
    const auto& perm = M.weyl_x()[T.w].perm;
    const int nr = M.datum().num_roots(), r = M.r();
    std::vector<int> orbit(nr);
    long long sig = 1;
    for (int a = 0; a < nr; ++a) {
        int b = perm[a], l = 1;
        while (b != a) {
            b = perm[b];
            ++l;
        }
        orbit[a] = l;
        sig = lcm_ll(sig, l);
    }
    const int bound = static_cast<int>(sig) * r;
    std::set<int> tested, skipped;
    Levels top = M.levels(Descriptor::Top());
    for (int a = 0; a < nr && rep.regular; ++a) {
        for (int m = orbit[a]; m <= bound; m += orbit[a]) {
            if (M.ambient() % m != 0) {
                skipped.insert(m);
                continue;
            }
            tested.insert(m);
            std::vector<GroupElement> line;
            const IVec& co = M.datum().coroot(a);
            for (int x : M.subfield(m)) {
                if (r >= 2)
                    line.push_back(M.cochar_element(co, TruncatedSeries::constant(M.field(), M.L(), 1) +
                                                            TruncatedSeries::monomial(M.field(), M.L(), x, r - 1)));
                else if (x != 0)
                    line.push_back(M.cochar_element(co, TruncatedSeries::constant(M.field(), M.L(), x)));
            }
            bool nontrivial = false;
            for (const auto& s : line) {
                GroupElement cur = s, norm = s;
                for (int k = 1; k < m; ++k) {
                    cur = T.sigma_split(M, cur);
                    norm = M.mul(norm, cur);
                }
                if (T.sigma_split(M, cur) != s) throw std::logic_error("coroot line point not fixed by sigma^m");
                if (!M.member(norm, top)) throw std::logic_error("norm left the top filtration torus");
                if (value_exponent(T, c, norm) != 0) nontrivial = true;
            }
            if (!nontrivial) {
                rep.regular = false;
                rep.failing_root = a;
                break;
            }
        }
    }
    rep.tested_m.assign(tested.begin(), tested.end());
    rep.skipped_m.assign(skipped.begin(), skipped.end());
    return rep;
}

std::string tri_str(Tri t)
{
    switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Indeterminate: return "indeterminate";
    }
    return "?";
}

nlohmann::json VeryRegularResult::to_json(const GroupModel& M) const
{
    nlohmann::json j = {{"status", tri_str(status)}};
    if (status == Tri::Yes) {
        j["torus"] = torus;
        j["k"] = M.to_json(k);
        j["t"] = M.to_json(t);
    }
    return j;
}

bool split_very_regular(const GroupModel& M, const GroupElement& s)
{
    for (int a = 0; a < M.datum().num_roots(); ++a) {
        auto [i, j] = M.positions(a)[0];
        if (M.coef(s, i, i, 0) == M.coef(s, j, j, 0)) return false;
    }
    return true;
}

VeryRegularIndex::VeryRegularIndex(const GroupModel& M, const std::vector<const RationalTorus*>& tori,
                                   const std::vector<GroupElement>& G, bool complete)
    : M_(M), complete_(complete)
{
    std::vector<GroupElement> Ginv;
    for (const auto& k : G) Ginv.push_back(M.inv(k));
    for (size_t i = 0; i < tori.size(); ++i)
        for (const auto& s : tori[i]->split_points) {
            if (!split_very_regular(M, s)) continue;
            GroupElement t = tori[i]->from_split(M, s);
            for (size_t u = 0; u < G.size(); ++u) {
                GroupElement c = M.mul(M.mul(G[u], t), Ginv[u]);
                if (!map_.count(c)) map_[c] = VeryRegularResult{Tri::Yes, static_cast<int>(i), G[u], t};
            }
        }
}

VeryRegularResult VeryRegularIndex::query(const GroupElement& g) const
{
    auto it = map_.find(g);
    if (it != map_.end()) return it->second;
    VeryRegularResult r;
    r.status = complete_ ? Tri::No : Tri::Indeterminate;
    return r;
}

std::vector<TorsorElement> torsor(const GroupModel& M, const RationalTorus& T, const RationalTorus& Tp)
{
    std::vector<TorsorElement> out;
    const int nw = static_cast<int>(M.weyl_x().size());
    for (int v = 0; v < nw; ++v) out.push_back({v, M.mul(M.mul(Tp.h, M.weyl_rep(v)), T.hinv)});
    for (auto& e : out) {
        GroupElement sn = M.frobenius(e.n);
        for (int u = 0; u < nw; ++u) {
            GroupElement d = T.to_split(M, M.mul(M.inv(out[u].n), sn));
            if (M.is_diagonal(d) && M.in_group(d)) {
                e.sigma_image = u;
                break;
            }
        }
        if (e.sigma_image < 0) throw std::logic_error("torsor not stable under Frobenius");
    }
    return out;
}

Character ad_character(const GroupModel& M, const RationalTorus& T, const RationalTorus& Tp, const TorsorElement& v,
                       const Character& theta, int lift_trials)
{
    if (!v.fixed()) throw DomainError("transporter class is not Frobenius-fixed");
    if (T.exponent != Tp.exponent || T.size() != Tp.size()) throw DomainError("tori of different shape");
    auto eval = [&](const GroupElement& n) {
        Character out;
        GroupElement ni = M.inv(n);
        for (size_t i = 0; i < Tp.gens.size(); ++i) {
            GroupElement tp = Tp.from_split(M, Tp.gens[i]);
            GroupElement s = T.to_split(M, M.mul(M.mul(ni, tp), n));
            long long k = value_exponent(T, theta, s);
            long long step = T.exponent / Tp.orders[i];
            if (k % step != 0) throw std::logic_error("conjugated character has the wrong order");
            out.exps.push_back(static_cast<int>(k / step));
        }
        return out;
    };
    Character base = eval(v.n);
    std::mt19937 rng(12345);
    const auto& vals = M.subfield(M.ambient());
    for (int trial = 0; trial < lift_trials; ++trial) {
        // n tau with tau a random point of T_r over the ambient field
        std::vector<TruncatedSeries> d;
        for (const auto& lam : M.torus_basis()) {
            (void)lam;
            std::vector<int> c(M.L());
            do c[0] = vals[rng() % vals.size()];
            while (c[0] == 0);
            for (int k = 1; k < M.L(); ++k) c[k] = vals[rng() % vals.size()];
            d.emplace_back(M.field(), c);
        }
        GroupElement tau = M.identity();
        for (size_t k = 0; k < d.size(); ++k) tau = M.mul(tau, M.cochar_element(M.torus_basis()[k], d[k]));
        if (!(eval(M.mul(v.n, T.from_split(M, tau))) == base)) throw std::logic_error("character depends on the lift");
    }
    return base;
}

std::vector<GroupElement> rational_points(const GroupModel& M, long long budget)
{
    if (M.has_twist()) throw ConfigError("rational points are enumerated for untwisted Frobenius only");
    auto s = M.enumerate_pattern(M.levels(Descriptor::G(0)), 1, budget);
    std::vector<GroupElement> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace dlpar
