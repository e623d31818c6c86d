#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "dlpar/errors.hpp"
#include "dlpar/parahoric.hpp"

namespace dlpar {

Levels GroupModel::levels(const Descriptor& d) const
{
    const int r = spec_.r, N = datum_.num_roots(), s = prof_.s();
    auto cap = [&](int a) { return std::clamp(a, 0, r); };
    auto gai = [&](int a, int i, int alpha) {
        if (i < 1 || i > s + 2) throw DomainError("jump index " + std::to_string(i) + " out of range");
        if (i == s + 2) return cap(a + 1);
        if (prof_.red(alpha) || prof_.eps(alpha) >= prof_.jump(i)) return cap(a);
        return cap(a + 1);
    };
    auto check_sys = [&] {
        for (int a : d.system)
            if (a < 0 || a >= N) throw DomainError("root index out of range in positive system");
    };
    Levels l;
    l.diag = r;
    l.root.assign(N, r);
    switch (d.kind) {
    case Descriptor::Kind::G:
        l.diag = cap(d.a);
        for (auto& x : l.root) x = cap(d.a);
        break;
    case Descriptor::Kind::Gai:
        l.diag = d.i == s + 2 ? cap(d.a + 1) : cap(d.a);
        for (int a = 0; a < N; ++a) l.root[a] = gai(d.a, d.i, a);
        break;
    case Descriptor::Kind::T:
        l.diag = cap(d.a);
        break;
    case Descriptor::Kind::Root:
        if (d.alpha < 0 || d.alpha >= N) throw DomainError("root index out of range");
        l.root[d.alpha] = cap(d.a);
        break;
    case Descriptor::Kind::Unipotent:
        check_sys();
        for (int a : d.system) l.root[a] = cap(d.a);
        break;
    case Descriptor::Kind::Nai:
        check_sys();
        for (int a : d.system) l.root[a] = gai(d.a, d.i, a);
        break;
    case Descriptor::Kind::Borel:
        check_sys();
        l.diag = 0;
        for (int a : d.system) l.root[a] = 0;
        break;
    case Descriptor::Kind::K1: {
        check_sys();
        if (d.w < 0 || d.w >= static_cast<int>(weyl_x_.size())) throw DomainError("Weyl index out of range");
        const auto& perm = weyl_x_[d.w].perm;
        std::vector<char> pos(N, 0);
        for (int a : d.system) pos[a] = 1;
        for (int b = 0; b < N; ++b)
            // alpha = w(b) with alpha and b both negative
            if (!pos[b] && !pos[perm[b]]) l.root[perm[b]] = cap(1);
        break;
    }
    case Descriptor::Kind::Top:
        l.diag = cap(r - 1);
        break;
    case Descriptor::Kind::TopAlpha:
        if (d.alpha < 0 || d.alpha >= N) throw DomainError("root index out of range");
        l.diag = cap(r - 1);
        l.top_alpha = d.alpha;
        break;
    }
    return l;
}

Levels GroupModel::sigma(const Levels& l) const
{
    Levels out = l;
    for (int a = 0; a < datum_.num_roots(); ++a) out.root[sigma_root_[a]] = l.root[a];
    if (l.top_alpha >= 0) out.top_alpha = sigma_root_[l.top_alpha];
    return out;
}

bool GroupModel::member(const GroupElement& g, const Levels& l) const
{
    if (!in_group(g)) return false;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int lo = i == j ? l.diag : bound(i, j, l.root[root_at_[i * n_ + j]]);
            for (int k = 0; k < std::min(lo, L_); ++k) {
                int v = g.c[(i * n_ + j) * L_ + k];
                if (i == j && k == 0) v = F_->sub(v, 1);
                if (v != 0) return false;
            }
        }
    if (l.top_alpha < 0) return true;
    const IVec& co = datum_.coroot(l.top_alpha);
    std::vector<int> e(n_);
    for (int k = 0; k < n_; ++k) e[k] = datum_.pair(weights_[k], co);
    if (spec_.r >= 2) {
        int c = -1;
        for (int k = 0; k < n_; ++k) {
            int ek = F_->from_int(e[k]);
            if (ek == 0) continue;
            c = F_->div(coef(g, k, k, spec_.r - 1), ek);
            break;
        }
        for (int k = 0; k < n_; ++k) {
            int want = c < 0 ? 0 : F_->mul(c, F_->from_int(e[k]));
            if (coef(g, k, k, spec_.r - 1) != want) return false;
        }
        return true;
    }
    for (int u = 1; u < F_->size(); ++u) {
        bool ok = true;
        for (int k = 0; k < n_ && ok; ++k) {
            int val = e[k] >= 0 ? F_->pow(u, e[k]) : F_->inv(F_->pow(u, -e[k]));
            if (coef(g, k, k, 0) != val) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

std::vector<GroupElement> GroupModel::generators(const Levels& l, int n) const
{
    std::vector<GroupElement> gens;
    std::vector<int> basis = subfield_basis(n);
    const int r = spec_.r;
    for (int a = 0; a < datum_.num_roots(); ++a) {
        if (l.root[a] >= r) continue;
        auto [i, j] = pos_[a][0];
        for (int k = bound(i, j, l.root[a]); k < theta(i, j); ++k)
            for (int b : basis) gens.push_back(root_element_adapted(a, TruncatedSeries::monomial(*F_, L_, b, k)));
    }
    if (l.diag < r) {
        int gamma = subfield_generator(n);
        std::vector<IVec> cochars = torus_basis_;
        if (l.top_alpha >= 0) cochars = {datum_.coroot(l.top_alpha)};
        int lo = l.top_alpha >= 0 ? r - 1 : l.diag;
        for (const IVec& lam : cochars) {
            if (lo == 0) gens.push_back(cochar_element(lam, TruncatedSeries::constant(*F_, L_, gamma)));
            for (int k = std::max(lo, 1); k < r; ++k)
                for (int b : basis) {
                    TruncatedSeries u = TruncatedSeries::constant(*F_, L_, 1) + TruncatedSeries::monomial(*F_, L_, b, k);
                    gens.push_back(cochar_element(lam, u));
                }
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

ElementSet GroupModel::enumerate_pattern(const Levels& l, int n, long long budget) const
{
    const std::vector<int>& vals = subfield(n);
    const int r = spec_.r;
    std::vector<int> slots;  // flat coefficient indices
    GroupElement base = zero_matrix();
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int off = (i * n_ + j) * L_;
            if (i == j) {
                int lo = l.top_alpha >= 0 ? r - 1 : l.diag;
                if (lo >= 1 || l.diag >= r) base.c[off] = 1;
                if (l.diag >= r) continue;
                for (int k = lo; k < r; ++k) slots.push_back(off + k);
            } else {
                int a = l.root[root_at_[i * n_ + j]];
                if (a >= r) continue;
                for (int k = bound(i, j, a); k < theta(i, j); ++k) slots.push_back(off + k);
            }
        }
    ElementSet out;
    std::vector<size_t> idx(slots.size(), 0);
    long long scanned = 0;
    GroupElement g = base;
    for (int s : slots) g.c[s] = vals[0];
    while (true) {
        if (++scanned > budget)
            throw ResourceError("pattern enumeration exceeded the budget of " + std::to_string(budget), static_cast<long long>(out.size()));
        if (member(g, l)) out.insert(g);
        size_t k = 0;
        for (; k < slots.size(); ++k) {
            if (++idx[k] < vals.size()) {
                g.c[slots[k]] = vals[idx[k]];
                break;
            }
            idx[k] = 0;
            g.c[slots[k]] = vals[0];
        }
        if (k == slots.size()) break;
    }
    return out;
}

ElementSet GroupModel::enumerate_closure(const std::vector<GroupElement>& gens, long long budget) const
{
    ElementSet out;
    std::deque<GroupElement> queue;
    out.insert(identity());
    queue.push_back(identity());
    while (!queue.empty()) {
        GroupElement x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            GroupElement y = mul(x, g);
            if (out.insert(y).second) {
                if (static_cast<long long>(out.size()) > budget)
                    throw ResourceError("closure exceeded the budget of " + std::to_string(budget), static_cast<long long>(out.size()));
                queue.push_back(std::move(y));
            }
        }
    }
    return out;
}

ElementSet GroupModel::enumerate(const Descriptor& d, int n, long long budget, bool cross_check) const
{
    Levels l = levels(d);
    ElementSet pat = enumerate_pattern(l, n, budget);
    if (cross_check) {
        ElementSet clo = enumerate_closure(generators(l, n), budget);
        if (clo != pat)
            throw std::logic_error("pattern and generator closure disagree for " + d.label() + ": " +
                                   std::to_string(pat.size()) + " vs " + std::to_string(clo.size()));
    }
    return pat;
}

int GroupModel::depth(const GroupElement& g) const
{
    int a = 0;
    while (a < spec_.r && member(g, Descriptor::G(a + 1))) ++a;
    return a;
}

void GroupModel::build_weyl()
{
    // W_x: generated by reflections in reductive roots
    std::vector<WeylElement> gens;
    for (int a = 0; a < datum_.num_roots(); ++a)
        if (prof_.red(a)) gens.push_back(datum_.reflection(a));
    const auto& all = datum_.weyl_elements();
    std::set<IMat> seen = {all[0].matrix};
    weyl_x_ = {all[0]};
    for (size_t h = 0; h < weyl_x_.size(); ++h)
        for (const auto& s : gens) {
            WeylElement w = datum_.compose(s, weyl_x_[h]);
            if (seen.insert(w.matrix).second) weyl_x_.push_back(w);
        }
    // canonical order: as listed in the full Weyl group
    std::sort(weyl_x_.begin(), weyl_x_.end(), [&](const WeylElement& a, const WeylElement& b) {
        return datum_.weyl_index(a) < datum_.weyl_index(b);
    });
    for (const auto& w : weyl_x_) {
        std::vector<int> perm(n_);
        for (int k = 0; k < n_; ++k) {
            IVec img(weights_[k].size(), 0);
            for (size_t r = 0; r < img.size(); ++r)
                for (size_t c = 0; c < img.size(); ++c) img[r] += w.char_matrix[r][c] * weights_[k][c];
            perm[k] = static_cast<int>(std::find(weights_.begin(), weights_.end(), img) - weights_.begin());
            if (perm[k] == n_) throw std::logic_error("Weyl element does not permute the weights");
        }
        weyl_perm_.push_back(perm);
        bool found = false;
        for (int mask = 0; mask < (1 << n_) && !found; ++mask) {
            GroupElement g = zero_matrix();
            for (int k = 0; k < n_; ++k) {
                if (tau0(perm[k], k) != 0 && perm[k] != k) throw std::logic_error("W_x element leaves the pattern");
                g.c[(perm[k] * n_ + k) * L_] = (mask >> k & 1) ? F_->neg(1) : 1;
            }
            if (in_group(g)) {
                weyl_rep_.push_back(g);
                found = true;
            }
        }
        if (!found) throw std::logic_error("no signed permutation representative in the group");
    }
}

namespace {

int rank_of(const Field& F, std::vector<std::vector<int>> m)
{
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int piv = -1;
        for (int i = rk; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rk]);
        int inv = F.inv(m[rk][c]);
        for (int i = 0; i < rows; ++i) {
            if (i == rk || m[i][c] == 0) continue;
            int f = F.mul(m[i][c], inv);
            for (int j = 0; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[rk][j]));
        }
        ++rk;
    }
    return rk;
}

}  // namespace

int GroupModel::bruhat_component(const GroupElement& g) const
{
    std::vector<std::vector<int>> red(n_, std::vector<int>(n_, 0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i == j || prof_.red(root_at_[i * n_ + j])) red[i][j] = coef(g, i, j, 0);
    // ranks of bottom-left submatrices are invariant under upper-triangular row and column operations
    auto profile_of = [&](const std::vector<std::vector<int>>& m) {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                std::vector<std::vector<int>> sub;
                for (int u = i; u < n_; ++u) sub.emplace_back(m[u].begin(), m[u].begin() + j + 1);
                out.push_back(rank_of(*F_, sub));
            }
        return out;
    };
    std::vector<int> pg = profile_of(red);
    for (size_t w = 0; w < weyl_x_.size(); ++w) {
        std::vector<std::vector<int>> pm(n_, std::vector<int>(n_, 0));
        for (int k = 0; k < n_; ++k) pm[weyl_perm_[w][k]][k] = 1;
        if (profile_of(pm) == pg) return static_cast<int>(w);
    }
    throw std::logic_error("no Bruhat cell matches the reduction");
}

IwahoriParts GroupModel::iwahori_decompose(const GroupElement& g, int a) const
{
    if (!member(g, Descriptor::G(a))) throw DomainError("element is not in G^" + std::to_string(a));
    IwahoriParts out;
    if (!ldu(g, out)) throw std::logic_error("Iwahori decomposition hit a non-unit pivot");
    return out;
}

bool GroupModel::ldu(const GroupElement& g, IwahoriParts& out) const
{
    // Doolittle over the truncated ring
    std::vector<std::vector<TruncatedSeries>> A;
    for (int i = 0; i < n_; ++i) {
        A.emplace_back();
        for (int j = 0; j < n_; ++j) A[i].push_back(entry(g, i, j));
    }
    TruncatedSeries zero(*F_, L_), one = TruncatedSeries::constant(*F_, L_, 1);
    std::vector<std::vector<TruncatedSeries>> Lm(n_, std::vector<TruncatedSeries>(n_, zero)), Um = Lm;
    std::vector<TruncatedSeries> D(n_, zero);
    for (int k = 0; k < n_; ++k) {
        if (!A[k][k].is_unit()) return false;
        D[k] = A[k][k];
        TruncatedSeries di = D[k].inv();
        Lm[k][k] = one;
        Um[k][k] = one;
        for (int i = k + 1; i < n_; ++i) Lm[i][k] = A[i][k] * di;
        for (int j = k + 1; j < n_; ++j) Um[k][j] = di * A[k][j];
        for (int i = k + 1; i < n_; ++i)
            for (int j = k + 1; j < n_; ++j) A[i][j] = A[i][j] - Lm[i][k] * D[k] * Um[k][j];
    }
    out = IwahoriParts{zero_matrix(), diagonal(D), zero_matrix()};
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            set_entry(out.lower, i, j, Lm[i][j]);
            set_entry(out.upper, i, j, Um[i][j]);
        }
    return true;
}

GroupElement GroupModel::multiply_out(const std::vector<TruncatedSeries>& coords, const std::vector<int>& order) const
{
    GroupElement g = identity();
    for (int b : order)
        if (coords[b].valuation() < coords[b].order()) g = mul(g, root_element_adapted(b, coords[b]));
    return g;
}

std::vector<TruncatedSeries> GroupModel::factor_unipotent(const GroupElement& z, const std::vector<int>& system,
                                                          const std::vector<int>& order) const
{
    std::vector<TruncatedSeries> e(datum_.num_roots(), TruncatedSeries(*F_, L_));
    std::vector<int> by_height = system;
    std::stable_sort(by_height.begin(), by_height.end(),
                     [&](int a, int b) { return datum_.height(a, system) < datum_.height(b, system); });
    for (int b : by_height) {
        auto [i, j] = pos_[b][0];
        GroupElement P = multiply_out(e, order);
        // entry (i, j) of the product is e_b plus terms from lower heights
        TruncatedSeries rest = entry(P, i, j) - e[b];
        e[b] = entry(z, i, j) - rest;
    }
    if (multiply_out(e, order) != z) throw DomainError("element does not factor over the given positive system");
    return e;
}

int GroupModel::root_depth(int beta, const TruncatedSeries& e) const
{
    auto [i, j] = pos_[beta][0];
    int v = e.valuation();
    int a = 0;
    while (a < spec_.r && v >= bound(i, j, a + 1)) ++a;
    return a;
}

Stratum GroupModel::stratum(const GroupElement& z, const std::vector<int>& system, const std::vector<int>& order) const
{
    if (is_identity(z)) throw DomainError("stratum of the identity");
    if (!member(z, Descriptor::N(system, 1))) throw DomainError("element is not in the level-1 unipotent group");
    Stratum st;
    st.a = 1;
    while (st.a + 1 < spec_.r && member(z, Descriptor::N(system, st.a + 1))) ++st.a;
    auto e = factor_unipotent(z, system, order);
    std::vector<int> dep(datum_.num_roots(), spec_.r);
    for (int b : system) dep[b] = root_depth(b, e[b]);
    if (st.a >= 2) {
        for (int b : system)
            if (dep[b] == st.a) st.A.push_back(b);
    } else {
        int s = prof_.s();
        st.i = 1;
        while (st.i + 1 <= s + 1 && member(z, Descriptor::Nai(system, 1, st.i + 1))) ++st.i;
        std::set<int> sys(system.begin(), system.end());
        for (int b : prof_.phi[st.i - 1])
            if (sys.count(b) && dep[b] == 1) st.A.push_back(b);
        for (int j = 1; j < st.i; ++j)
            for (int b : prof_.phi[j - 1])
                if (sys.count(b) && dep[b] <= 1) st.moreover = false;
    }
    std::sort(st.A.begin(), st.A.end());
    bool any_nonred = false;
    for (int b : st.A)
        if (!prof_.red(b)) any_nonred = true;
    int best = -1;
    for (int b : st.A)
        if (!any_nonred || !prof_.red(b)) best = std::max(best, datum_.height(b, system));
    for (int b : st.A)
        if ((!any_nonred || !prof_.red(b)) && datum_.height(b, system) == best) st.I.push_back(b);
    return st;
}

LambdaResult GroupModel::lambda_eval(const GroupElement& z, const GroupElement& xi, int alpha,
                                     const std::vector<int>& system) const
{
    LambdaResult out;
    out.commutator = commutator(xi, z);
    std::vector<TruncatedSeries> d;
    for (int k = 0; k < n_; ++k) d.push_back(entry(out.commutator, k, k));
    out.torus_part = diagonal(d);
    if (!in_group(out.torus_part)) return out;
    GroupElement rest = mul(inv(out.torus_part), out.commutator);
    out.member = member(out.torus_part, Descriptor::TopAlpha(alpha)) &&
                 member(rest, Descriptor::N(opposite(system), spec_.r - 1));
    return out;
}

}  // namespace dlpar
