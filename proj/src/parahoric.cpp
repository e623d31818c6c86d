#include "dlpar/parahoric.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "dlpar/errors.hpp"

namespace dlpar {

std::string Descriptor::label() const
{
    auto sys = [&] {
        std::string s = "[";
        for (size_t k = 0; k < system.size(); ++k) s += (k ? "," : "") + std::to_string(system[k]);
        return s + "]";
    };
    switch (kind) {
    case Kind::G: return "G^" + std::to_string(a);
    case Kind::Gai: return "G^{" + std::to_string(a) + "," + std::to_string(i) + "}";
    case Kind::T: return "T^" + std::to_string(a);
    case Kind::Root: return "U_" + std::to_string(alpha) + "^" + std::to_string(a);
    case Kind::Unipotent: return "N" + sys() + "^" + std::to_string(a);
    case Kind::Nai: return "N" + sys() + "^{" + std::to_string(a) + "," + std::to_string(i) + "}";
    case Kind::Borel: return "B" + sys();
    case Kind::K1: return "K1" + sys() + "(w" + std::to_string(w) + ")";
    case Kind::Top: return "Top";
    case Kind::TopAlpha: return "Top^" + std::to_string(alpha);
    }
    return "?";
}

namespace {

int prime_power_exponent(int q, int& p)
{
    p = 0;
    for (int c = 2; c <= q; ++c)
        if (q % c == 0) {
            p = c;
            break;
        }
    if (p == 0) throw ConfigError("q must be a prime power, got " + std::to_string(q));
    int d = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++d;
    }
    if (m != 1) throw ConfigError("q must be a prime power, got " + std::to_string(q));
    return d;
}

}  // namespace

GroupModel::GroupModel(const GroupSpec& spec) : spec_(spec)
{
    if (spec_.family != "GL" && spec_.family != "SL" && spec_.family != "Sp")
        throw ConfigError("unsupported family " + spec_.family);
    if (spec_.r < 1) throw ConfigError("r must be at least 1");
    if (spec_.ambient < 1) throw ConfigError("ambient level must be at least 1");
    if (spec_.family == "Sp" && spec_.n != 4) throw ConfigError("Sp is modelled in rank 2 only (n = 4)");
    if (spec_.n < 1 || spec_.n > 4) throw ConfigError("matrix size must be in 1..4");
    int p = 0;
    d_ = prime_power_exponent(spec_.q, p);
    long long order = 1;
    for (int k = 0; k < d_ * spec_.ambient; ++k) order *= p;
    if (order > 4096) throw ConfigError("ambient field F_{q^" + std::to_string(spec_.ambient) + "} too large");
    F_ = &Field::get(p, d_ * spec_.ambient);

    datum_ = RootDatum::build(spec_.family, spec_.n);
    if (spec_.x.empty()) spec_.x.assign(datum_.dim(), Rat(0));
    if (static_cast<int>(spec_.x.size()) != datum_.dim()) throw ConfigError("point has wrong dimension");
    prof_ = profile(datum_, spec_.x);
    n_ = spec_.n;
    L_ = spec_.r;

    if (spec_.family == "Sp") {
        weights_ = {{1, 0}, {0, 1}, {0, -1}, {-1, 0}};
        bar_ = {3, 2, 1, 0};
        torus_basis_ = {{1, 0}, {0, 1}};
    } else {
        for (int k = 0; k < n_; ++k) {
            IVec e(n_, 0);
            e[k] = 1;
            weights_.push_back(e);
        }
        if (spec_.family == "GL")
            torus_basis_ = weights_;
        else
            for (int a : datum_.simple()) torus_basis_.push_back(datum_.coroot(a));
    }
    for (int k = 0; k < n_; ++k) {
        w_.push_back(datum_.pair(weights_[k], spec_.x));
        c_.push_back(static_cast<int>(floor_rat(w_.back())));
    }

    root_at_.assign(n_ * n_, -1);
    pos_.assign(datum_.num_roots(), {});
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            IVec a(weights_[i].size());
            for (size_t k = 0; k < a.size(); ++k) a[k] = weights_[i][k] - weights_[j][k];
            int idx = datum_.find(a);
            if (idx < 0) throw ConfigError("matrix position without a root");
            root_at_[i * n_ + j] = idx;
            pos_[idx].push_back({i, j});
        }
    tau0_.assign(n_ * n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j) tau0_[i * n_ + j] = bound(i, j, 0);
    check_pattern();

    sec_sign_.assign(datum_.num_roots(), 0);
    sec_shift_.assign(datum_.num_roots(), 0);
    for (int a = 0; a < datum_.num_roots(); ++a) {
        if (pos_[a].empty()) throw ConfigError("root without a matrix position");
        if (pos_[a].size() == 1) continue;
        if (spec_.family != "Sp" || pos_[a].size() != 2) throw ConfigError("unexpected root multiplicity");
        auto [i, j] = pos_[a][0];
        auto [k, l] = pos_[a][1];
        // X = E_ij + s E_kl must satisfy X^T J + J X = 0 for J = antidiag(1, 1, -1, -1)
        auto J = [&](int u, int v) { return v == bar_[u] ? (u < 2 ? 1 : -1) : 0; };
        for (int s : {1, -1}) {
            bool ok = true;
            for (int u = 0; u < 4 && ok; ++u)
                for (int v = 0; v < 4 && ok; ++v) {
                    auto X = [&](int x, int y) { return (x == i && y == j ? 1 : 0) + (x == k && y == l ? s : 0); };
                    int val = 0;
                    for (int w = 0; w < 4; ++w) val += X(w, u) * J(w, v) + J(u, w) * X(w, v);
                    if (val != 0) ok = false;
                }
            if (ok) {
                sec_sign_[a] = s;
                break;
            }
        }
        if (sec_sign_[a] == 0) throw ConfigError("no symplectic root element");
        sec_shift_[a] = (c_[k] - c_[l]) - (c_[i] - c_[j]);
    }
    build_twist();
    build_weyl();
}

int GroupModel::bound(int i, int j, int a) const
{
    if (i == j) return a;
    int alpha = root_at_[i * n_ + j];
    return affine_index(prof_, alpha, a, spec_.r) + c_[i] - c_[j];
}

void GroupModel::check_pattern() const
{
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            int t0 = tau0_[i * n_ + j];
            if (t0 < 0 || t0 > 1) throw ConfigError("adapted pattern out of range at a position");
            if (theta(i, j) > L_) throw ConfigError("truncation threshold exceeds internal order");
        }
    for (int a = 0; a <= spec_.r; ++a)
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k)
                for (int j = 0; j < n_; ++j) {
                    int lhs1 = (i == k ? 0 : tau0_[i * n_ + k]) + bound(k, j, a);
                    int lhs2 = bound(i, k, a) + (k == j ? 0 : tau0_[k * n_ + j]);
                    int rhs = bound(i, j, a);
                    if (i == j && a == 0) continue;
                    if (lhs1 < rhs || lhs2 < rhs) throw ConfigError("valuation pattern violates the triangle inequality");
                }
}

const std::vector<int>& GroupModel::subfield(int n) const
{
    if (n < 1 || spec_.ambient % n != 0)
        throw DomainError("field level " + std::to_string(n) + " does not divide the ambient level");
    if (subfields_.size() <= static_cast<size_t>(n)) subfields_.resize(n + 1);
    if (subfields_[n].empty()) subfields_[n] = F_->subfield(d_ * n);
    return subfields_[n];
}

int GroupModel::subfield_generator(int n) const
{
    subfield(n);
    long long total = F_->size() - 1;
    long long sub = 1;
    for (int k = 0; k < d_ * n; ++k) sub *= F_->p();
    return F_->exp(total / (sub - 1));
}

std::vector<int> GroupModel::subfield_basis(int n) const
{
    // powers of a generator span; pick an F_p-independent prefix greedily
    int g = subfield_generator(n);
    int dim = d_ * n;
    std::vector<int> basis;
    std::vector<int> span = {0};
    int x = 1;
    for (int k = 0; static_cast<int>(basis.size()) < dim && k < F_->size(); ++k) {
        if (std::find(span.begin(), span.end(), x) == span.end()) {
            basis.push_back(x);
            std::vector<int> next;
            for (int s : span)
                for (int c = 0; c < F_->p(); ++c) next.push_back(F_->add(s, F_->mul(F_->from_int(c), x)));
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            span = next;
        }
        x = F_->mul(x, g);
    }
    return basis;
}

TruncatedSeries GroupModel::entry(const GroupElement& g, int i, int j) const
{
    std::vector<int> c(g.c.begin() + (i * n_ + j) * L_, g.c.begin() + (i * n_ + j + 1) * L_);
    return TruncatedSeries(*F_, std::move(c));
}

void GroupModel::set_entry(GroupElement& g, int i, int j, const TruncatedSeries& s) const
{
    int lim = theta(i, j);
    for (int k = 0; k < L_; ++k) g.c[(i * n_ + j) * L_ + k] = (k < lim && k < s.order()) ? s[k] : 0;
}

GroupElement GroupModel::zero_matrix() const { return GroupElement{std::vector<int>(n_ * n_ * L_, 0)}; }

GroupElement GroupModel::identity() const
{
    GroupElement g = zero_matrix();
    for (int i = 0; i < n_; ++i) g.c[(i * n_ + i) * L_] = 1;
    return g;
}

GroupElement GroupModel::canonical(GroupElement g) const
{
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int lim = theta(i, j);
            for (int k = lim; k < L_; ++k) g.c[(i * n_ + j) * L_ + k] = 0;
        }
    return g;
}

GroupElement GroupModel::mul(const GroupElement& a, const GroupElement& b) const
{
    GroupElement out = zero_matrix();
    const Field& F = *F_;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int lim = theta(i, j);
            int* acc = &out.c[(i * n_ + j) * L_];
            for (int k = 0; k < n_; ++k) {
                const int* x = &a.c[(i * n_ + k) * L_];
                const int* y = &b.c[(k * n_ + j) * L_];
                for (int u = 0; u < lim; ++u) {
                    if (x[u] == 0) continue;
                    for (int v = 0; u + v < lim; ++v)
                        if (y[v] != 0) acc[u + v] = F.add(acc[u + v], F.mul(x[u], y[v]));
                }
            }
        }
    return out;
}

GroupElement GroupModel::inv(const GroupElement& a) const
{
    // Gauss-Jordan over F[t]/t^L with unit pivots
    std::vector<std::vector<TruncatedSeries>> A, B;
    TruncatedSeries zero(*F_, L_), one = TruncatedSeries::constant(*F_, L_, 1);
    for (int i = 0; i < n_; ++i) {
        A.emplace_back();
        B.emplace_back();
        for (int j = 0; j < n_; ++j) {
            A[i].push_back(entry(a, i, j));
            B[i].push_back(i == j ? one : zero);
        }
    }
    for (int col = 0; col < n_; ++col) {
        int piv = -1;
        for (int i = col; i < n_; ++i)
            if (A[i][col].is_unit()) {
                piv = i;
                break;
            }
        if (piv < 0) throw ArithmeticError("matrix is not invertible over the truncated ring");
        std::swap(A[piv], A[col]);
        std::swap(B[piv], B[col]);
        TruncatedSeries s = A[col][col].inv();
        for (int j = 0; j < n_; ++j) {
            A[col][j] = A[col][j] * s;
            B[col][j] = B[col][j] * s;
        }
        for (int i = 0; i < n_; ++i) {
            if (i == col || A[i][col] == zero) continue;
            TruncatedSeries f = A[i][col];
            for (int j = 0; j < n_; ++j) {
                A[i][j] = A[i][j] - f * A[col][j];
                B[i][j] = B[i][j] - f * B[col][j];
            }
        }
    }
    GroupElement out = zero_matrix();
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) set_entry(out, i, j, B[i][j]);
    return out;
}

GroupElement GroupModel::commutator(const GroupElement& a, const GroupElement& b) const
{
    return mul(mul(inv(a), inv(b)), mul(a, b));
}

GroupElement GroupModel::pow(const GroupElement& a, long long e) const
{
    GroupElement base = e < 0 ? inv(a) : a;
    if (e < 0) e = -e;
    GroupElement out = identity();
    while (e > 0) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

TruncatedSeries GroupModel::det(const GroupElement& g) const
{
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    TruncatedSeries total(*F_, L_);
    do {
        int inversions = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (perm[i] > perm[j]) ++inversions;
        TruncatedSeries term = TruncatedSeries::constant(*F_, L_, 1);
        for (int i = 0; i < n_; ++i) term = term * entry(g, i, perm[i]);
        total = (inversions % 2) ? total - term : total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

void GroupModel::shift_into(std::vector<int>& dst, int off, const TruncatedSeries& s, int shift, int limit) const
{
    for (int k = 0; k < L_; ++k) dst[off + k] = 0;
    for (int k = 0; k < s.order(); ++k) {
        if (s[k] == 0) continue;
        int t = k + shift;
        if (t < 0) throw ArithmeticError("negative power shift of a series with low-order terms");
        if (t < limit) dst[off + t] = s[k];
    }
}

GroupElement GroupModel::star(const GroupElement& g) const
{
    // J^{-1} g^T J in the adapted basis
    auto J = [&](int u, int v) { return v == bar_[u] ? (u < 2 ? 1 : -1) : 0; };
    GroupElement out = zero_matrix();
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int ib = bar_[i], jb = bar_[j];
            int s = -J(i, ib) * J(jb, j);  // J^{-1} = -J
            int e = (c_[i] - c_[j]) - (c_[jb] - c_[ib]);
            TruncatedSeries x = entry(g, jb, ib);
            if (s < 0) x = -x;
            shift_into(out.c, (i * n_ + j) * L_, x, e, theta(i, j));
        }
    return out;
}

bool GroupModel::symplectic(const GroupElement& g) const
{
    try {
        return mul(star(g), g) == identity();
    } catch (const ArithmeticError&) {
        return false;
    }
}

bool GroupModel::in_group(const GroupElement& g) const
{
    if (g.c.size() != static_cast<size_t>(n_ * n_ * L_)) return false;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int lo = i == j ? 0 : tau0_[i * n_ + j];
            int hi = theta(i, j);
            for (int k = 0; k < L_; ++k) {
                int v = g.c[(i * n_ + j) * L_ + k];
                if (v != 0 && (k < lo || k >= hi)) return false;
            }
        }
    TruncatedSeries dt = det(g);
    if (!dt.is_unit()) return false;
    if (spec_.family == "SL") return dt == TruncatedSeries::constant(*F_, L_, 1);
    if (spec_.family == "Sp") return symplectic(g);
    return true;
}

bool GroupModel::is_diagonal(const GroupElement& g) const
{
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j)
                for (int k = 0; k < L_; ++k)
                    if (g.c[(i * n_ + j) * L_ + k] != 0) return false;
    return true;
}

int GroupModel::field_level(const GroupElement& g) const
{
    for (int n = 1; n <= spec_.ambient; ++n) {
        if (spec_.ambient % n != 0) continue;
        bool ok = true;
        for (int v : g.c)
            if (!F_->in_subfield(v, d_ * n)) {
                ok = false;
                break;
            }
        if (ok) return n;
    }
    return spec_.ambient;
}

GroupElement GroupModel::root_element_adapted(int alpha, const TruncatedSeries& e) const
{
    GroupElement g = identity();
    auto [i, j] = pos_[alpha][0];
    if (e.valuation() < tau0(i, j) && e.valuation() < e.order())
        throw MembershipError("root coordinate below the parahoric bound");
    set_entry(g, i, j, e);
    if (pos_[alpha].size() == 2) {
        auto [k, l] = pos_[alpha][1];
        TruncatedSeries y = sec_sign_[alpha] < 0 ? -e : e;
        shift_into(g.c, (k * n_ + l) * L_, y, sec_shift_[alpha], theta(k, l));
    }
    return g;
}

GroupElement GroupModel::root_element(int alpha, const TruncatedSeries& y, int shift) const
{
    if (alpha < 0 || alpha >= datum_.num_roots()) throw DomainError("root index out of range");
    int v = y.valuation();
    if (v >= y.order()) return identity();
    if (v + shift < prof_.m(alpha))
        throw MembershipError("valuation " + std::to_string(v + shift) + " below m = " +
                              std::to_string(prof_.m(alpha)) + " for root " + root_str(datum_.root(alpha)));
    auto [i, j] = pos_[alpha][0];
    TruncatedSeries e(*F_, L_);
    std::vector<int> c(L_, 0);
    int sh = shift + c_[i] - c_[j];
    for (int k = 0; k < y.order(); ++k)
        if (y[k] != 0 && k + sh < L_) c[k + sh] = y[k];
    return root_element_adapted(alpha, TruncatedSeries(*F_, c));
}

GroupElement GroupModel::diagonal(const std::vector<TruncatedSeries>& d) const
{
    GroupElement g = zero_matrix();
    for (int i = 0; i < n_; ++i) set_entry(g, i, i, d[i]);
    return g;
}

GroupElement GroupModel::cochar_element(const IVec& lambda, const TruncatedSeries& u) const
{
    if (!u.is_unit()) throw ArithmeticError("cocharacter evaluated at a non-unit");
    std::vector<TruncatedSeries> d;
    TruncatedSeries ui = u.inv();
    for (int k = 0; k < n_; ++k) {
        int e = datum_.pair(weights_[k], lambda);
        TruncatedSeries x = TruncatedSeries::constant(*F_, L_, 1);
        for (int s = 0; s < std::abs(e); ++s) x = x * (e > 0 ? u : ui);
        d.push_back(x);
    }
    return diagonal(d);
}

void GroupModel::build_twist()
{
    sigma_root_.resize(datum_.num_roots());
    std::iota(sigma_root_.begin(), sigma_root_.end(), 0);
    if (spec_.twist_perm.empty()) return;
    if (static_cast<int>(spec_.twist_perm.size()) != n_ || static_cast<int>(spec_.twist_pow.size()) != n_)
        throw ConfigError("twist must give a permutation and powers for every basis vector");
    std::vector<int> seen(n_, 0);
    for (int k : spec_.twist_perm) {
        if (k < 0 || k >= n_ || seen[k]) throw ConfigError("twist permutation invalid");
        seen[k] = 1;
    }
    tw_perm_ = spec_.twist_perm;
    tw_exp_.resize(n_);
    for (int j = 0; j < n_; ++j) tw_exp_[j] = c_[tw_perm_[j]] - c_[j] + spec_.twist_pow[j];
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            int pi = tw_perm_[i], pj = tw_perm_[j];
            for (int a = 0; a <= spec_.r; ++a)
                if (bound(i, j, a) + tw_exp_[i] - tw_exp_[j] != bound(pi, pj, a))
                    throw ConfigError("twist does not normalize the valuation pattern");
        }
    for (int a = 0; a < datum_.num_roots(); ++a) {
        auto [i, j] = pos_[a][0];
        sigma_root_[a] = root_at(tw_perm_[i], tw_perm_[j]);
    }
}

GroupElement GroupModel::frobenius(const GroupElement& g, int power) const
{
    if (power < 0) throw DomainError("negative Frobenius power");
    if (!has_twist()) {
        GroupElement out = g;
        for (int& v : out.c) v = F_->frob(v, (d_ * power) % (d_ * spec_.ambient));
        return out;
    }
    GroupElement cur = g;
    for (int s = 0; s < power; ++s) {
        GroupElement out = zero_matrix();
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                int pi = tw_perm_[i], pj = tw_perm_[j];
                std::vector<int> c(L_);
                for (int k = 0; k < L_; ++k) c[k] = F_->frob(cur.c[(i * n_ + j) * L_ + k], d_);
                shift_into(out.c, (pi * n_ + pj) * L_, TruncatedSeries(*F_, c), tw_exp_[i] - tw_exp_[j], theta(pi, pj));
            }
        cur = out;
    }
    return cur;
}

std::vector<int> GroupModel::opposite(const std::vector<int>& system) const
{
    std::vector<int> out;
    for (int a : system) out.push_back(datum_.neg(a));
    std::sort(out.begin(), out.end());
    return out;
}

nlohmann::json GroupModel::to_json(const GroupElement& g) const
{
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < n_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < n_; ++j) row.push_back(entry(g, i, j).encode());
        rows.push_back(row);
    }
    return rows;
}

std::string GroupModel::encode(const GroupElement& g) const { return to_json(g).dump(); }

GroupElement GroupModel::from_json(const nlohmann::json& j) const
{
    if (!j.is_array() || static_cast<int>(j.size()) != n_) throw DomainError("element must be an n x n array");
    GroupElement g = zero_matrix();
    for (int i = 0; i < n_; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n_) throw DomainError("element row has wrong size");
        for (int k = 0; k < n_; ++k) {
            // either the series encoding "[c0,c1]" or a plain array
            nlohmann::json e = j[i][k].is_string() ? nlohmann::json::parse(j[i][k].get<std::string>(), nullptr, false) : j[i][k];
            if (!e.is_array()) throw DomainError("entry must be a coefficient array");
            std::vector<int> c;
            for (const auto& v : e) {
                if (!v.is_number_integer()) throw DomainError("coefficients must be integers");
                c.push_back(v.get<int>());
            }
            if (static_cast<int>(c.size()) > L_) throw DomainError("entry has too many coefficients");
            c.resize(L_, 0);
            for (int v : c)
                if (v < 0 || v >= F_->size()) throw DomainError("coefficient outside the ambient field");
            set_entry(g, i, k, TruncatedSeries(*F_, c));
        }
    }
    GroupElement out = canonical(g);
    if (out != g || !in_group(out)) throw MembershipError("matrix does not lie in G_r");
    return out;
}

}  // namespace dlpar
