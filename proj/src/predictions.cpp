#include "dlpar/predictions.hpp"

#include <algorithm>
#include <set>

#include "dlpar/errors.hpp"

namespace dlpar {

Setting::Setting(const GroupModel& M, long long budget) : M_(M)
{
    for (int w : weyl_class_reps(M)) tori_.push_back(realize_torus(M, w, budget));
    G_ = rational_points(M, budget);
    for (const auto& g : G_) Ginv_.push_back(M.inv(g));
    std::vector<const RationalTorus*> ptrs;
    for (const auto& T : tori_) ptrs.push_back(&T);
    vr_ = std::make_unique<VeryRegularIndex>(M, ptrs, G_, true);
}

std::vector<GroupElement> Setting::very_regular_sample(int torus, size_t limit) const
{
    std::vector<GroupElement> all;
    for (const auto& g : G_) {
        auto r = vr_->query(g);
        if (r.status == Tri::Yes && r.torus == torus) all.push_back(g);
    }
    if (limit == 0 || all.size() <= limit) return all;
    std::vector<GroupElement> out;
    for (size_t i = 0; i < limit; ++i) out.push_back(all[i * all.size() / limit]);
    return out;
}

namespace {

VeryRegularResult certify(const Setting& S, const GroupElement& g)
{
    auto r = S.very_regular(g);
    if (r.status != Tri::Yes) throw DomainError("element is not certified very regular (" + tri_str(r.status) + ")");
    return r;
}

bool hyperspecial(const GroupModel& M)
{
    for (int i = 0; i < M.size(); ++i)
        for (int j = 0; j < M.size(); ++j)
            if (i != j && M.tau0(i, j) != 0) return false;
    return true;
}

// split-coordinate torus part of a Borel element
GroupElement diagonal_part(const GroupModel& M, const GroupElement& y)
{
    std::vector<TruncatedSeries> d;
    for (int i = 0; i < M.size(); ++i) d.push_back(M.entry(y, i, i));
    return M.diagonal(d);
}

// right kernel of a matrix over the field, as basis vectors
std::vector<std::vector<int>> nullspace(const Field& F, std::vector<std::vector<int>> A, int cols)
{
    std::vector<int> pivcol;
    size_t row = 0;
    for (int c = 0; c < cols && row < A.size(); ++c) {
        size_t piv = row;
        while (piv < A.size() && A[piv][c] == 0) ++piv;
        if (piv == A.size()) continue;
        std::swap(A[row], A[piv]);
        int inv = F.inv(A[row][c]);
        for (auto& x : A[row]) x = F.mul(x, inv);
        for (size_t i = 0; i < A.size(); ++i) {
            if (i == row || A[i][c] == 0) continue;
            int f = A[i][c];
            for (int j = 0; j < cols; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[row][j]));
        }
        pivcol.push_back(c);
        ++row;
    }
    std::vector<bool> is_piv(cols, false);
    for (int c : pivcol) is_piv[c] = true;
    std::vector<std::vector<int>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<int> v(cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = F.neg(A[i][f]);
        basis.push_back(v);
    }
    return basis;
}

TruncatedSeries trace(const GroupModel& M, const GroupElement& g)
{
    TruncatedSeries s = M.entry(g, 0, 0);
    for (int i = 1; i < M.size(); ++i) s = s + M.entry(g, i, i);
    return s;
}

// necessary condition for conjugacy over the algebraic closure
bool same_invariants(const GroupModel& M, const GroupElement& a, const GroupElement& b)
{
    if (M.det(a) != M.det(b)) return false;
    GroupElement x = a, y = b;
    for (int k = 1; k <= M.size(); ++k) {
        if (trace(M, x) != trace(M, y)) return false;
        x = M.mul(x, a);
        y = M.mul(y, b);
    }
    return true;
}

}  // namespace

Cyclo trace_prediction(const Setting& S, int torus, const Character& theta, const GroupElement& g)
{
    const GroupModel& M = S.model();
    auto cert = certify(S, g);
    const RationalTorus& T = S.torus(torus);
    const RationalTorus& Tz = S.torus(cert.torus);
    Cyclo sum(T.exponent);
    for (const auto& e : torsor(M, T, Tz)) {
        if (!e.fixed()) continue;
        GroupElement s = T.to_split(M, M.mul(M.mul(M.inv(e.n), cert.t), e.n));
        sum += value(T, theta, s);
    }
    return sum;
}

InnerProduct inner_product_prediction(const Setting& S, int T, const Character& theta, int Tp, const Character& thetap)
{
    const GroupModel& M = S.model();
    InnerProduct out;
    out.hypothesis = is_regular(M, S.torus(T), theta).regular || is_regular(M, S.torus(Tp), thetap).regular;
    for (const auto& e : torsor(M, S.torus(T), S.torus(Tp)))
        if (e.fixed() && ad_character(M, S.torus(T), S.torus(Tp), e, theta) == thetap) ++out.count;
    return out;
}

std::vector<GroupElement> lang_fixed_set(const Setting& S, int torus, const GroupElement& g, int n, long long budget,
                                         long long* candidates)
{
    const GroupModel& M = S.model();
    const Field& F = M.field();
    if (M.ambient() % n != 0) throw ConfigError("field level does not divide the ambient level");
    const RationalTorus& T = S.torus(torus);
    const int N = M.size(), L = M.L();
    // coefficient slots of the level-0 pattern
    std::vector<int> slots;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = (i == j ? 0 : M.tau0(i, j)); k < M.theta(i, j); ++k) slots.push_back((i * N + j) * L + k);
    const int D = static_cast<int>(slots.size());
    const auto& vals = M.subfield(n);
    const Descriptor U = Descriptor::N(M.standard_positive(), 0);
    std::vector<GroupElement> out;
    long long scanned = 0;
    for (const auto& s : T.split_points) {
        GroupElement t = T.from_split(M, s);
        if (!same_invariants(M, g, t)) continue;
        // columns of X -> g X - X t
        std::vector<std::vector<int>> A(D, std::vector<int>(D, 0));
        for (int c = 0; c < D; ++c) {
            GroupElement E = M.zero_matrix();
            E.c[slots[c]] = 1;
            GroupElement l = M.mul(g, E), rr = M.mul(E, t);
            for (int r = 0; r < D; ++r) A[r][c] = F.sub(l.c[slots[r]], rr.c[slots[r]]);
        }
        auto K = nullspace(F, A, D);
        const int dim = static_cast<int>(K.size());
        long long total = 1;
        for (int i = 0; i < dim; ++i) {
            total *= static_cast<long long>(vals.size());
            if (total > budget) break;
        }
        if (scanned + total > budget)
            throw ResourceError("fixed-point scan exceeded the budget of " + std::to_string(budget), scanned);
        scanned += total;
        std::vector<size_t> idx(dim, 0);
        while (true) {
            GroupElement X = M.zero_matrix();
            for (int i = 0; i < dim; ++i) {
                int c = vals[idx[i]];
                if (c == 0) continue;
                for (int r = 0; r < D; ++r)
                    if (K[i][r]) X.c[slots[r]] = F.add(X.c[slots[r]], F.mul(c, K[i][r]));
            }
            if (M.in_group(X)) {
                GroupElement y = M.mul(M.inv(X), M.frobenius(X));
                if (M.member(T.to_split(M, y), U)) out.push_back(X);
            }
            int k = 0;
            for (; k < dim; ++k) {
                if (++idx[k] < vals.size()) break;
                idx[k] = 0;
            }
            if (k == dim) break;
        }
    }
    if (candidates) *candidates = scanned;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> borel_conjugacy_witness(const Setting& S, int torus, const GroupElement& g, const GroupElement& x)
{
    const GroupModel& M = S.model();
    const RationalTorus& T = S.torus(torus);
    const Descriptor B = Descriptor::B(M.standard_positive());
    if (!M.member(T.to_split(M, M.mul(M.mul(M.inv(x), g), x)), B))
        throw DomainError("g does not lie in x B x^{-1}");
    auto cert = certify(S, g);
    std::vector<int> hits;
    for (const auto& e : torsor(M, T, S.torus(cert.torus))) {
        GroupElement lift = M.mul(cert.k, e.n);
        if (M.member(T.to_split(M, M.mul(M.inv(lift), x)), B)) hits.push_back(e.v);
    }
    return hits;
}

bool FixedPointReport::ok() const
{
    if (uniqueness_failures != 0) return false;
    for (const auto& c : classes)
        if (c.sigma_fixed ? !c.equals_coset : !c.points.empty()) return false;
    return !classes.empty();
}

nlohmann::json FixedPointReport::to_json(const GroupModel& M, bool with_points) const
{
    nlohmann::json cl = nlohmann::json::array();
    for (const auto& c : classes) {
        nlohmann::json j = {{"v", c.v}, {"sigma_fixed", c.sigma_fixed}, {"size", c.points.size()},
                            {"equals_coset", c.equals_coset}};
        if (with_points) {
            j["points"] = nlohmann::json::array();
            for (const auto& x : c.points) j["points"].push_back(M.encode(x));
        }
        cl.push_back(j);
    }
    return {{"level", level}, {"candidates", candidates}, {"witnesses", witnesses},
            {"uniqueness_failures", uniqueness_failures}, {"classes", cl}, {"ok", ok()}};
}

FixedPointReport fixed_points(const Setting& S, int torus, const GroupElement& g, int n, long long budget)
{
    const GroupModel& M = S.model();
    const RationalTorus& T = S.torus(torus);
    auto cert = certify(S, g);
    FixedPointReport rep;
    rep.level = n;
    auto pts = lang_fixed_set(S, torus, g, n, budget, &rep.candidates);
    rep.witnesses = static_cast<long long>(pts.size());
    auto tors = torsor(M, T, S.torus(cert.torus));
    for (const auto& e : tors) {
        FixedPointClass c;
        c.v = e.v;
        c.sigma_fixed = e.fixed();
        rep.classes.push_back(c);
    }
    for (const auto& x : pts) {
        auto hits = borel_conjugacy_witness(S, torus, g, x);
        if (hits.size() != 1) {
            ++rep.uniqueness_failures;
            continue;
        }
        for (auto& c : rep.classes)
            if (c.v == hits[0]) c.points.push_back(x);
    }
    for (size_t i = 0; i < rep.classes.size(); ++i) {
        auto& c = rep.classes[i];
        if (!c.sigma_fixed || c.points.size() != T.size()) continue;
        const GroupElement& x0 = c.points.front();
        GroupElement lift = M.mul(cert.k, tors[i].n);
        bool good = M.frobenius(x0) == x0 && M.is_diagonal(T.to_split(M, M.mul(M.inv(lift), x0)));
        std::vector<GroupElement> coset;
        for (const auto& s : T.split_points) coset.push_back(M.mul(x0, T.from_split(M, s)));
        std::sort(coset.begin(), coset.end());
        c.equals_coset = good && coset == c.points;
    }
    return rep;
}

std::vector<GroupElement> fixed_points_scan(const Setting& S, int torus, const GroupElement& g)
{
    const GroupModel& M = S.model();
    const RationalTorus& T = S.torus(torus);
    std::vector<GroupElement> out;
    for (size_t u = 0; u < S.group().size(); ++u) {
        GroupElement y = T.to_split(M, M.mul(M.mul(S.inverses()[u], g), S.group()[u]));
        if (T.contains_split(y)) out.push_back(S.group()[u]);
    }
    return out;
}

SuiteReport suite_torus_fixing(const Setting& S, int n)
{
    const GroupModel& M = S.model();
    SuiteReport rep;
    rep.name = "torus_fixing";
    const RationalTorus& T = S.torus(0);
    auto U = M.enumerate_pattern(M.levels(Descriptor::N(M.standard_positive(), 0)), n);
    std::vector<GroupElement> Us(U.begin(), U.end());
    std::sort(Us.begin(), Us.end());
    for (const auto& s : T.split_points) {
        if (!split_very_regular(M, s)) continue;
        GroupElement si = M.inv(s);
        for (const auto& h : Us) {
            ++rep.checks;
            if (!M.is_identity(h) && M.mul(M.mul(s, h), si) == h)
                rep.fail({{"s", M.encode(s)}, {"h", M.encode(h)}});
        }
    }
    return rep;
}

std::vector<Cyclo> induced_characters(const Setting& S, const std::vector<Character>& thetas, const GroupElement& g)
{
    const GroupModel& M = S.model();
    if (!hyperspecial(M)) throw DomainError("induced character needs the hyperspecial point");
    const RationalTorus& T = S.torus(0);
    if (T.w != 0) throw DomainError("induced character needs the split torus");
    const Descriptor B = Descriptor::B(M.standard_positive());
    long long borel = 0;
    std::vector<GroupElement> parts;
    for (size_t u = 0; u < S.group().size(); ++u) {
        if (M.member(T.to_split(M, S.group()[u]), B)) ++borel;
        GroupElement y = T.to_split(M, M.mul(M.mul(S.inverses()[u], g), S.group()[u]));
        if (M.member(y, B)) parts.push_back(diagonal_part(M, y));
    }
    std::vector<Cyclo> out;
    for (const auto& th : thetas) {
        std::vector<Rat> acc(T.exponent, Rat(0));
        for (const auto& s : parts) acc[value_exponent(T, th, s)] += Rat(1);
        Cyclo c(T.exponent);
        for (int k = 0; k < T.exponent; ++k)
            if (acc[k] != Rat(0)) c.add_zeta(k, acc[k] / Rat(borel));
        out.push_back(c);
    }
    return out;
}

Cyclo induced_character(const Setting& S, const Character& theta, const GroupElement& g)
{
    return induced_characters(S, {theta}, g).front();
}

size_t MatchReport::irreducibles() const
{
    std::set<int> s;
    for (const auto& h : matches) s.insert(h.chi);
    return s.size();
}

nlohmann::json MatchReport::to_json(const CharacterTable& tab) const
{
    nlohmann::json m = nlohmann::json::array();
    for (const auto& h : matches) m.push_back({{"chi", h.chi}, {"sign", h.sign}, {"degree", tab.degrees[h.chi]}});
    return {{"very_regular_classes", very_regular_classes.size()}, {"matches", m}, {"count", matches.size()},
            {"irreducibles", irreducibles()}};
}

MatchReport match_irreducible(const Setting& S, const CharacterTable& tab, int torus, const Character& theta)
{
    MatchReport rep;
    std::vector<Cyclo> pred;
    for (size_t c = 0; c < tab.classes(); ++c) {
        if (S.very_regular(tab.reps[c]).status != Tri::Yes) continue;
        rep.very_regular_classes.push_back(static_cast<int>(c));
        pred.push_back(trace_prediction(S, torus, theta, tab.reps[c]));
    }
    for (int chi = 0; chi < static_cast<int>(tab.degrees.size()); ++chi)
        for (int sign : {1, -1}) {
            bool all = !pred.empty();
            for (size_t k = 0; k < pred.size() && all; ++k)
                all = tab.value(chi, rep.very_regular_classes[k]) * Rat(sign) == pred[k];
            if (all) rep.matches.push_back({chi, sign});
        }
    return rep;
}

nlohmann::json LevelChange::to_json() const
{
    return {{"induced_dim", induced_dim}, {"inflated_dim", inflated_dim}, {"predicted_induced", predicted_induced},
            {"predicted_inflated", predicted_inflated}, {"ok", ok()}};
}

LevelChange level_compare(const std::string& family, int n, int q, int r, int s)
{
    if (family != "GL") throw DomainError("level comparison is implemented for GL_n");
    if (r < 1 || s <= r) throw DomainError("need 1 <= r < s");
    GroupSpec spec;
    spec.family = family;
    spec.n = n;
    spec.q = q;
    spec.r = s;
    GroupModel M(spec);
    auto G = rational_points(M);
    const Descriptor B = Descriptor::B(M.standard_positive());
    const Descriptor K = Descriptor::G(r);
    long long b = 0, bk = 0, k = 0;
    for (const auto& g : G) {
        bool inb = M.member(g, B), ink = M.member(g, K);
        b += inb;
        k += ink;
        bk += inb && ink;
    }
    LevelChange out;
    long long G_order = static_cast<long long>(G.size());
    out.induced_dim = G_order / b;
    // |B G^r| = |B| |G^r| / |B cap G^r|
    out.inflated_dim = G_order / (b * k / bk);
    long long flag = 1;
    for (int i = 1; i <= n; ++i) {
        long long qi = 1;
        for (int e = 0; e < i; ++e) qi *= q;
        flag = flag * (qi - 1) / (q - 1);
    }
    long long extra = 1;
    for (int e = 0; e < (s - r) * n * (n - 1) / 2; ++e) extra *= q;
    out.predicted_inflated = flag;
    out.predicted_induced = flag * extra;
    return out;
}

}  // namespace dlpar
