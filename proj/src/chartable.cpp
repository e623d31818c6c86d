#include <algorithm>
#include <cmath>
#include <numeric>

#include "dlpar/errors.hpp"
#include "dlpar/predictions.hpp"

namespace dlpar {

namespace {

using ll = long long;

ll powmod(ll a, ll e, ll p)
{
    ll r = 1;
    a %= p;
    if (a < 0) a += p;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

ll invmod(ll a, ll p) { return powmod(a, p - 2, p); }

bool is_prime(ll n)
{
    if (n < 2) return false;
    for (ll d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ll primitive_root(ll p)
{
    std::vector<ll> fac;
    ll m = p - 1;
    for (ll d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            fac.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) fac.push_back(m);
    for (ll g = 2;; ++g) {
        bool ok = true;
        for (ll f : fac) ok = ok && powmod(g, (p - 1) / f, p) != 1;
        if (ok) return g;
    }
}

using Mat = std::vector<std::vector<ll>>;

// characteristic polynomial, lowest degree first, via Hessenberg reduction
std::vector<ll> charpoly(Mat H, ll p)
{
    const int n = static_cast<int>(H.size());
    for (int m = 1; m + 1 < n; ++m) {
        int i = m;
        while (i < n && H[i][m - 1] == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            std::swap(H[i], H[m]);
            for (int j = 0; j < n; ++j) std::swap(H[j][i], H[j][m]);
        }
        ll inv = invmod(H[m][m - 1], p);
        for (i = m + 1; i < n; ++i) {
            ll u = H[i][m - 1] * inv % p;
            if (u == 0) continue;
            for (int j = 0; j < n; ++j) H[i][j] = ((H[i][j] - u * H[m][j]) % p + p) % p;
            for (int j = 0; j < n; ++j) H[j][m] = (H[j][m] + u * H[j][i]) % p;
        }
    }
    std::vector<std::vector<ll>> P(n + 1);
    P[0] = {1};
    for (int m = 1; m <= n; ++m) {
        std::vector<ll> cur(m + 1, 0);
        for (size_t k = 0; k < P[m - 1].size(); ++k) {
            cur[k + 1] = (cur[k + 1] + P[m - 1][k]) % p;
            cur[k] = ((cur[k] - H[m - 1][m - 1] * P[m - 1][k]) % p + p) % p;
        }
        ll t = 1;
        for (int i = 1; i < m; ++i) {
            t = t * H[m - i][m - i - 1] % p;
            ll f = t * H[m - i - 1][m - 1] % p;
            for (size_t k = 0; k < P[m - i - 1].size(); ++k)
                cur[k] = ((cur[k] - f * P[m - i - 1][k]) % p + p) % p;
        }
        P[m] = cur;
    }
    return P[n];
}

std::vector<std::vector<ll>> nullspace_mod(Mat A, ll p)
{
    const int rows = static_cast<int>(A.size()), cols = rows ? static_cast<int>(A[0].size()) : 0;
    std::vector<int> pivcol;
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        int piv = row;
        while (piv < rows && A[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[row], A[piv]);
        ll inv = invmod(A[row][c], p);
        for (auto& x : A[row]) x = x * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == row || A[i][c] == 0) continue;
            ll f = A[i][c];
            for (int j = 0; j < cols; ++j) A[i][j] = ((A[i][j] - f * A[row][j]) % p + p) % p;
        }
        pivcol.push_back(c);
        ++row;
    }
    std::vector<bool> is_piv(cols, false);
    for (int c : pivcol) is_piv[c] = true;
    std::vector<std::vector<ll>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<ll> v(cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = (p - A[i][f]) % p;
        basis.push_back(v);
    }
    return basis;
}

// a subspace of F_p^k in reduced echelon form
struct Space {
    std::vector<std::vector<ll>> vecs;
    std::vector<int> piv;
};

Space echelon(std::vector<std::vector<ll>> v, ll p)
{
    Space s;
    const int k = v.empty() ? 0 : static_cast<int>(v[0].size());
    size_t row = 0;
    for (int c = 0; c < k && row < v.size(); ++c) {
        size_t piv = row;
        while (piv < v.size() && v[piv][c] == 0) ++piv;
        if (piv == v.size()) continue;
        std::swap(v[row], v[piv]);
        ll inv = invmod(v[row][c], p);
        for (auto& x : v[row]) x = x * inv % p;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i == row || v[i][c] == 0) continue;
            ll f = v[i][c];
            for (int j = 0; j < k; ++j) v[i][j] = ((v[i][j] - f * v[row][j]) % p + p) % p;
        }
        s.piv.push_back(c);
        ++row;
    }
    v.resize(row);
    s.vecs = std::move(v);
    return s;
}

// sum of a_k zeta_e^k reduced modulo Phi_e
std::vector<ll> reduce_cyclotomic(std::vector<ll> acc, int e)
{
    const auto& phi = cyclotomic_poly(e);
    int deg = static_cast<int>(phi.size()) - 1;
    for (int k = e - 1; k >= deg; --k) {
        ll c = acc[k];
        if (c == 0) continue;
        for (int j = 0; j <= deg; ++j) acc[k - deg + j] -= c * phi[j];
    }
    acc.resize(deg);
    return acc;
}

}  // namespace

Cyclo CharacterTable::value(int chi, int cls) const
{
    Cyclo c(exponent);
    const auto& m = values[chi][cls];
    for (int k = 0; k < exponent; ++k)
        if (m[k]) c.add_zeta(k, Rat(m[k]));
    return c;
}

bool CharacterTable::orthogonality(std::string* why) const
{
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    const size_t h = degrees.size();
    if (h != classes()) return fail("number of characters differs from number of classes");
    ll sq = 0;
    for (int d : degrees) sq += static_cast<ll>(d) * d;
    if (sq != group_order) return fail("sum of squared degrees is " + std::to_string(sq));
    // sparse rows
    std::vector<std::vector<std::vector<std::pair<int, int>>>> sp(h);
    for (size_t a = 0; a < h; ++a) {
        sp[a].resize(classes());
        for (size_t c = 0; c < classes(); ++c)
            for (int k = 0; k < exponent; ++k)
                if (values[a][c][k]) sp[a][c].push_back({k, values[a][c][k]});
    }
    for (size_t a = 0; a < h; ++a)
        for (size_t b = a; b < h; ++b) {
            std::vector<ll> acc(exponent, 0);
            for (size_t c = 0; c < classes(); ++c)
                for (auto [i, x] : sp[a][c])
                    for (auto [j, y] : sp[b][c]) acc[((i - j) % exponent + exponent) % exponent] += sizes[c] * x * y;
            auto r = reduce_cyclotomic(acc, exponent);
            for (size_t k = 0; k < r.size(); ++k) {
                ll expect = (k == 0 && a == b) ? group_order : 0;
                if (r[k] != expect)
                    return fail("rows " + std::to_string(a) + " and " + std::to_string(b) + " are not orthogonal");
            }
        }
    return true;
}

nlohmann::json CharacterTable::to_json(const GroupModel& M) const
{
    nlohmann::json cls = nlohmann::json::array();
    for (size_t c = 0; c < classes(); ++c) cls.push_back({{"rep", M.encode(reps[c])}, {"size", sizes[c]}});
    nlohmann::json rows = nlohmann::json::array();
    for (size_t a = 0; a < degrees.size(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t c = 0; c < classes(); ++c) row.push_back(value(static_cast<int>(a), static_cast<int>(c)).to_json());
        rows.push_back({{"degree", degrees[a]}, {"values", row}});
    }
    return {{"group_order", group_order}, {"exponent", exponent}, {"prime", prime}, {"classes", cls},
            {"characters", rows}};
}

CharacterTable character_table(const GroupModel& M, const std::vector<GroupElement>& Gin, long long budget)
{
    if (static_cast<long long>(Gin.size()) > budget)
        throw ResourceError("group of order " + std::to_string(Gin.size()) + " exceeds the table budget", 0);
    CharacterTable tab;
    std::vector<GroupElement> G = Gin;
    std::sort(G.begin(), G.end());
    tab.group_order = static_cast<ll>(G.size());
    std::unordered_map<GroupElement, int, ElementHash> index;
    for (size_t i = 0; i < G.size(); ++i) index[G[i]] = static_cast<int>(i);
    if (!index.count(M.identity())) throw DomainError("element set does not contain the identity");
    std::vector<GroupElement> Ginv;
    for (const auto& g : G) {
        Ginv.push_back(M.inv(g));
        if (!index.count(Ginv.back())) throw DomainError("element set is not closed under inverses");
    }
    // conjugacy classes, identity first
    std::vector<int> cls(G.size(), -1);
    std::vector<std::vector<int>> members;
    std::vector<int> order_seq = {index[M.identity()]};
    for (size_t i = 0; i < G.size(); ++i) order_seq.push_back(static_cast<int>(i));
    for (int x : order_seq) {
        if (cls[x] >= 0) continue;
        int id = static_cast<int>(members.size());
        members.emplace_back();
        for (size_t u = 0; u < G.size(); ++u) {
            auto it = index.find(M.mul(M.mul(G[u], G[x]), Ginv[u]));
            if (it == index.end()) throw DomainError("element set is not closed under conjugation");
            if (cls[it->second] < 0) {
                cls[it->second] = id;
                members[id].push_back(it->second);
            }
        }
        std::sort(members[id].begin(), members[id].end());
    }
    const int k = static_cast<int>(members.size());
    for (int c = 0; c < k; ++c) {
        tab.reps.push_back(G[members[c].front()]);
        tab.sizes.push_back(static_cast<ll>(members[c].size()));
    }
    for (size_t i = 0; i < G.size(); ++i) tab.class_of[G[i]] = cls[i];
    for (int c = 0; c < k; ++c) tab.inverse_class.push_back(cls[index[Ginv[members[c].front()]]]);
    // orders and power maps
    std::vector<int> ord(k);
    std::vector<std::vector<int>> power(k);
    int e = 1;
    for (int c = 0; c < k; ++c) {
        GroupElement y = M.identity();
        power[c].push_back(0);
        y = tab.reps[c];
        while (!M.is_identity(y)) {
            power[c].push_back(tab.class_of.at(y));
            y = M.mul(y, tab.reps[c]);
        }
        ord[c] = static_cast<int>(power[c].size());
        e = static_cast<int>(std::lcm(static_cast<ll>(e), static_cast<ll>(ord[c])));
    }
    tab.exponent = e;
    ll p = e + 1;
    const ll bound = 2 * static_cast<ll>(std::ceil(std::sqrt(static_cast<double>(tab.group_order)))) + 1;
    while (p <= bound || !is_prime(p) || tab.group_order % p == 0) p += e;
    tab.prime = p;
    // class matrices: (M_j)_{i,l} = #{x in C_j : x^{-1} z_l in C_i}
    auto class_matrix = [&](int j) {
        Mat A(k, std::vector<ll>(k, 0));
        for (int l = 0; l < k; ++l)
            for (int x : members[j]) ++A[cls[index[M.mul(Ginv[x], tab.reps[l])]]][l];
        for (auto& row : A)
            for (auto& v : row) v %= p;
        return A;
    };
    // split F_p^k into common eigenspaces of the class matrices
    std::vector<Space> spaces;
    {
        std::vector<std::vector<ll>> id(k, std::vector<ll>(k, 0));
        for (int i = 0; i < k; ++i) id[i][i] = 1;
        spaces.push_back(echelon(id, p));
    }
    for (int j = 1; j < k; ++j) {
        bool done = true;
        for (const auto& s : spaces) done = done && s.vecs.size() == 1;
        if (done) break;
        Mat A = class_matrix(j);
        std::vector<Space> next;
        for (auto& s : spaces) {
            const int d = static_cast<int>(s.vecs.size());
            if (d == 1) {
                next.push_back(std::move(s));
                continue;
            }
            // restriction in the echelon coordinates
            Mat R(d, std::vector<ll>(d, 0));
            for (int b = 0; b < d; ++b) {
                std::vector<ll> y(k, 0);
                for (int i = 0; i < k; ++i) {
                    ll acc = 0;
                    for (int l = 0; l < k; ++l)
                        if (A[i][l] && s.vecs[b][l]) acc = (acc + A[i][l] * s.vecs[b][l]) % p;
                    y[i] = acc;
                }
                for (int a = 0; a < d; ++a) R[a][b] = y[s.piv[a]];
            }
            auto cp = charpoly(R, p);
            std::vector<ll> roots;
            for (ll x = 0; x < p; ++x) {
                ll v = 0;
                for (int t = static_cast<int>(cp.size()) - 1; t >= 0; --t) v = (v * x + cp[t]) % p;
                if (v == 0) roots.push_back(x);
            }
            if (roots.size() == 1) {
                next.push_back(std::move(s));
                continue;
            }
            int total = 0;
            for (ll lam : roots) {
                Mat B = R;
                for (int a = 0; a < d; ++a) B[a][a] = ((B[a][a] - lam) % p + p) % p;
                auto ker = nullspace_mod(B, p);
                std::vector<std::vector<ll>> vecs;
                for (const auto& c : ker) {
                    std::vector<ll> v(k, 0);
                    for (int a = 0; a < d; ++a)
                        if (c[a])
                            for (int i = 0; i < k; ++i) v[i] = (v[i] + c[a] * s.vecs[a][i]) % p;
                    vecs.push_back(v);
                }
                total += static_cast<int>(vecs.size());
                next.push_back(echelon(vecs, p));
            }
            if (total != d) throw std::logic_error("class algebra is not diagonalizable modulo the chosen prime");
        }
        spaces = std::move(next);
    }
    for (const auto& s : spaces)
        if (s.vecs.size() != 1) throw std::logic_error("class matrices failed to separate characters");
    // central characters -> degrees -> values
    const ll z = powmod(primitive_root(p), (p - 1) / e, p);
    const ll G_mod = tab.group_order % p;
    std::vector<std::pair<int, std::vector<std::vector<int>>>> rows;
    for (const auto& s : spaces) {
        std::vector<ll> w = s.vecs[0];
        ll n0 = invmod(w[0], p);
        for (auto& x : w) x = x * n0 % p;
        ll S = 0;
        for (int c = 0; c < k; ++c) S = (S + w[c] * w[tab.inverse_class[c]] % p * invmod(tab.sizes[c] % p, p)) % p;
        ll target = G_mod * invmod(S, p) % p;
        int deg = 0;
        for (ll d = 1; d * d <= tab.group_order; ++d)
            if (d * d % p == target) {
                deg = static_cast<int>(d);
                break;
            }
        if (deg == 0) throw std::logic_error("no degree matches the central character");
        std::vector<ll> chi(k);
        for (int c = 0; c < k; ++c) chi[c] = deg * w[c] % p * invmod(tab.sizes[c] % p, p) % p;
        std::vector<std::vector<int>> vals(k, std::vector<int>(e, 0));
        for (int c = 0; c < k; ++c) {
            const int o = ord[c];
            const ll zo = powmod(z, e / o, p);
            const ll oinv = invmod(o, p);
            int total = 0;
            for (int a = 0; a < o; ++a) {
                ll acc = 0;
                for (int l = 0; l < o; ++l)
                    acc = (acc + chi[power[c][l]] * powmod(zo, static_cast<ll>(o - a) * l % o, p)) % p;
                ll m = acc * oinv % p;
                if (m > deg) throw std::logic_error("eigenvalue multiplicity out of range; prime too small");
                vals[c][a * (e / o)] = static_cast<int>(m);
                total += static_cast<int>(m);
            }
            if (total != deg) throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
        }
        rows.push_back({deg, std::move(vals)});
    }
    std::sort(rows.begin(), rows.end());
    for (auto& [d, v] : rows) {
        tab.degrees.push_back(d);
        tab.values.push_back(std::move(v));
    }
    std::string why;
    if (!tab.orthogonality(&why)) throw std::logic_error("character table failed orthogonality: " + why);
    return tab;
}

}  // namespace dlpar
