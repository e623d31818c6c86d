#include "dlpar/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "dlpar/errors.hpp"

namespace dlpar {

namespace {

IMat identity(int n)
{
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat matmul(const IMat& a, const IMat& b)
{
    int n = static_cast<int>(a.size());
    IMat c(n, IVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (a[i][k])
                for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

IVec mat_apply(const IMat& m, const IVec& v)
{
    IVec out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

IVec unit(int n, int i, int scale = 1)
{
    IVec v(n, 0);
    v[i] = scale;
    return v;
}

IVec diff(int n, int i, int j)
{
    IVec v(n, 0);
    v[i] = 1;
    v[j] = -1;
    return v;
}

}  // namespace

std::string root_str(const IVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

RootDatum RootDatum::build(const std::string& family, int n)
{
    RootDatum d;
    d.family_ = family;
    std::vector<IVec> sroots, scoroots;
    auto type_a = [&](int dim) {
        d.dim_ = dim;
        d.pairing_ = identity(dim);
        for (int i = 0; i + 1 < dim; ++i) {
            sroots.push_back(diff(dim, i, i + 1));
            scoroots.push_back(diff(dim, i, i + 1));
        }
    };
    auto type_c2 = [&]() {
        d.dim_ = 2;
        d.pairing_ = identity(2);
        sroots = {diff(2, 0, 1), unit(2, 1, 2)};
        scoroots = {diff(2, 0, 1), unit(2, 1)};
    };
    if (family == "GL" || family == "SL") {
        if (n < 1 || n > 3) throw ConfigError(family + "_" + std::to_string(n) + " is not supported");
        if (family == "SL" && n < 2) throw ConfigError("SL_1 is not supported");
        type_a(n);
    } else if (family == "Sp") {
        if (n != 4) throw ConfigError("only Sp_4 is supported");
        type_c2();
    } else if (family == "A1" || family == "A2" || family == "A3") {
        type_a(family[1] - '0' + 1);
    } else if (family == "C2") {
        type_c2();
    } else if (family == "G2") {
        d.dim_ = 2;
        d.pairing_ = {{2, -1}, {-3, 2}};
        sroots = {unit(2, 0), unit(2, 1)};
        scoroots = {unit(2, 0), unit(2, 1)};
    } else {
        throw ConfigError("unsupported family: " + family);
    }

    // close the simple (root, coroot) pairs under simple reflections
    std::set<std::pair<IVec, IVec>> seen;
    std::deque<std::pair<IVec, IVec>> todo;
    for (size_t i = 0; i < sroots.size(); ++i) todo.push_back({sroots[i], scoroots[i]});
    while (!todo.empty()) {
        auto cur = todo.front();
        todo.pop_front();
        if (!seen.insert(cur).second) continue;
        for (size_t i = 0; i < sroots.size(); ++i) {
            int c1 = d.pair(cur.first, scoroots[i]);
            int c2 = d.pair(sroots[i], cur.second);
            IVec a = cur.first, b = cur.second;
            for (int k = 0; k < d.dim_; ++k) {
                a[k] -= c1 * sroots[i][k];
                b[k] -= c2 * scoroots[i][k];
            }
            if (!seen.count({a, b})) todo.push_back({a, b});
        }
    }
    for (const auto& [a, b] : seen) {
        d.roots_.push_back(a);
        d.coroots_.push_back(b);
    }
    for (size_t i = 0; i < d.roots_.size(); ++i) d.index_[d.roots_[i]] = static_cast<int>(i);
    for (const auto& s : sroots) d.simple_.push_back(d.find(s));
    d.finish();
    return d;
}

void RootDatum::finish()
{
    int N = num_roots();
    neg_.assign(N, -1);
    positive_.assign(N, false);
    for (int i = 0; i < N; ++i) {
        IVec m = roots_[i];
        for (int& x : m) x = -x;
        neg_[i] = find(m);
        if (neg_[i] < 0) throw ConfigError("root system not symmetric");
        if (pair(roots_[i], coroots_[i]) != 2) throw ConfigError("pairing of root and coroot is not 2");
    }
    std::vector<int> all(N);
    for (int i = 0; i < N; ++i) all[i] = i;
    for (int i = 0; i < N; ++i) {
        // simple coefficients of a root all share a sign
        auto c = simple_coefficients(i, {});
        positive_[i] = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    }

    strings_.assign(N * N, {});
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (neg_[a] != b) strings_[a * N + b] = compute_strings(a, b);

    // Weyl group by breadth-first search over simple reflections
    std::vector<WeylElement> gens;
    for (int s : simple_) gens.push_back(reflection(s));
    WeylElement id{identity(dim_), identity(dim_), all};
    std::set<IMat> seen{id.matrix};
    weyl_ = {id};
    for (size_t head = 0; head < weyl_.size(); ++head) {
        for (const auto& g : gens) {
            WeylElement w = compose(g, weyl_[head]);
            if (seen.insert(w.matrix).second) weyl_.push_back(w);
        }
    }
}

int RootDatum::pair(const IVec& chi, const IVec& lambda) const
{
    int s = 0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) s += chi[i] * pairing_[i][j] * lambda[j];
    return s;
}

Rat RootDatum::pair(const IVec& chi, const RatVec& lambda) const
{
    Rat s = 0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) s += Rat(chi[i] * pairing_[i][j]) * lambda[j];
    return s;
}

int RootDatum::find(const IVec& v) const
{
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> RootDatum::positive_roots() const
{
    std::vector<int> out;
    for (int i = 0; i < num_roots(); ++i)
        if (positive_[i]) out.push_back(i);
    return out;
}

std::vector<int> RootDatum::simple_coefficients(int i, const std::vector<int>& positive_system) const
{
    // simple roots of the positive system: positive roots that are not sums of two positive roots
    std::vector<int> basis;
    if (positive_system.empty()) {
        basis = simple_;
    } else {
        std::set<int> pos(positive_system.begin(), positive_system.end());
        for (int a : positive_system) {
            bool decomposable = false;
            for (int b : positive_system) {
                IVec c = roots_[a];
                for (int k = 0; k < dim_; ++k) c[k] -= roots_[b][k];
                int j = find(c);
                if (j >= 0 && pos.count(j)) decomposable = true;
            }
            if (!decomposable) basis.push_back(a);
        }
    }
    int m = static_cast<int>(basis.size());
    // Gaussian elimination on [B | v] over Q, B = dim x m
    std::vector<RatVec> A(dim_, RatVec(m + 1));
    for (int k = 0; k < dim_; ++k) {
        for (int j = 0; j < m; ++j) A[k][j] = roots_[basis[j]][k];
        A[k][m] = roots_[i][k];
    }
    int row = 0;
    std::vector<int> pivcol;
    for (int col = 0; col < m && row < dim_; ++col) {
        int piv = -1;
        for (int k = row; k < dim_; ++k)
            if (A[k][col] != Rat(0)) {
                piv = k;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[piv], A[row]);
        for (int k = 0; k < dim_; ++k) {
            if (k == row || A[k][col] == Rat(0)) continue;
            Rat f = A[k][col] / A[row][col];
            for (int j = col; j <= m; ++j) A[k][j] -= f * A[row][j];
        }
        pivcol.push_back(col);
        ++row;
    }
    for (int k = row; k < dim_; ++k)
        if (A[k][m] != Rat(0)) throw DomainError("root outside the span of the basis");
    std::vector<int> coeff(m, 0);
    for (int k = 0; k < row; ++k) {
        Rat c = A[k][m] / A[k][pivcol[k]];
        if (c.denominator() != 1) throw DomainError("non-integral simple coefficients");
        coeff[pivcol[k]] = static_cast<int>(c.numerator());
    }
    return coeff;
}

int RootDatum::height(int i, const std::vector<int>& positive_system) const
{
    if (std::find(positive_system.begin(), positive_system.end(), i) == positive_system.end())
        throw DomainError("height of a root outside the positive system: " + root_str(roots_.at(i)));
    auto c = simple_coefficients(i, positive_system);
    int h = 0;
    for (int x : c) h += x;
    return h;
}

const std::vector<RootDatum::StringPair>& RootDatum::root_string_pairs(int a, int b) const
{
    if (neg_.at(a) == b) throw DomainError("opposite roots");
    return strings_.at(a * num_roots() + b);
}

std::vector<RootDatum::StringPair> RootDatum::compute_strings(int a, int b) const
{
    std::vector<StringPair> out;
    const int search = 6;
    for (int p = 1; p <= search; ++p)
        for (int q = 1; q <= search; ++q) {
            IVec v(dim_);
            for (int k = 0; k < dim_; ++k) v[k] = p * roots_[a][k] + q * roots_[b][k];
            int g = find(v);
            if (g < 0) continue;
            if (p > 3 || q > 3) throw ConfigError("root string longer than expected");
            out.push_back({p, q, g});
        }
    return out;
}

WeylElement RootDatum::reflection(int i) const
{
    const IVec& a = roots_.at(i);
    const IVec& av = coroots_.at(i);
    WeylElement w;
    w.matrix = identity(dim_);
    w.char_matrix = identity(dim_);
    // lambda -> lambda - <a, lambda> a^vee ; chi -> chi - <chi, a^vee> a
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) {
            int pa = 0, pc = 0;
            for (int k = 0; k < dim_; ++k) {
                pa += a[k] * pairing_[k][c];
                pc += pairing_[c][k] * av[k];
            }
            w.matrix[r][c] -= av[r] * pa;
            w.char_matrix[r][c] -= a[r] * pc;
        }
    w.perm.resize(num_roots());
    for (int j = 0; j < num_roots(); ++j) w.perm[j] = find(mat_apply(w.char_matrix, roots_[j]));
    return w;
}

WeylElement RootDatum::compose(const WeylElement& a, const WeylElement& b) const
{
    WeylElement w;
    w.matrix = matmul(a.matrix, b.matrix);
    w.char_matrix = matmul(a.char_matrix, b.char_matrix);
    w.perm.resize(b.perm.size());
    for (size_t j = 0; j < b.perm.size(); ++j) w.perm[j] = a.perm[b.perm[j]];
    return w;
}

int RootDatum::weyl_index(const WeylElement& w) const
{
    for (size_t i = 0; i < weyl_.size(); ++i)
        if (weyl_[i].matrix == w.matrix) return static_cast<int>(i);
    return -1;
}

IVec RootDatum::act_cochar(const WeylElement& w, const IVec& lambda) const { return mat_apply(w.matrix, lambda); }

RatVec RootDatum::act_cochar(const WeylElement& w, const RatVec& lambda) const
{
    RatVec out(dim_, Rat(0));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out[i] += Rat(w.matrix[i][j]) * lambda[j];
    return out;
}

nlohmann::json RootDatum::to_json() const
{
    nlohmann::json j;
    j["family"] = family_;
    j["rank"] = rank();
    j["dim"] = dim_;
    j["roots"] = roots_;
    j["coroots"] = coroots_;
    j["simple"] = simple_;
    j["pairing"] = pairing_;
    return j;
}

}  // namespace dlpar
