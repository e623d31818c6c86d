#include "dlpar/apartment.hpp"

#include <algorithm>
#include <set>

#include "dlpar/errors.hpp"

namespace dlpar {

FiltrationProfile profile(const RootDatum& datum, const RatVec& v)
{
    if (static_cast<int>(v.size()) != datum.dim()) throw ConfigError("point has the wrong dimension");
    FiltrationProfile prof;
    prof.datum = &datum;
    prof.v = v;
    std::set<Rat> eps_set;
    for (int a = 0; a < datum.num_roots(); ++a) {
        Rat val = datum.pair(datum.root(a), v);
        RootProfile rp;
        rp.m = static_cast<int>(-floor_rat(val));
        rp.eps = val + Rat(rp.m);
        rp.reductive = rp.eps == Rat(0);
        if (!rp.reductive) eps_set.insert(rp.eps);
        prof.roots.push_back(rp);
    }
    prof.jumps.assign(eps_set.begin(), eps_set.end());
    prof.jumps.push_back(Rat(1));
    prof.phi.assign(prof.jumps.size(), {});
    for (int a = 0; a < datum.num_roots(); ++a) {
        auto& rp = prof.roots[a];
        if (rp.reductive) {
            rp.jump = prof.s() + 1;
        } else {
            rp.jump = 1 + static_cast<int>(std::lower_bound(prof.jumps.begin(), prof.jumps.end(), rp.eps) -
                                           prof.jumps.begin());
        }
        prof.phi[rp.jump - 1].push_back(a);
    }
    return prof;
}

nlohmann::json FiltrationProfile::to_json() const
{
    nlohmann::json j;
    j["family"] = datum->family();
    std::vector<std::string> vs;
    for (const auto& x : v) vs.push_back(rat_str(x));
    j["point"] = vs;
    std::vector<std::string> js;
    for (const auto& x : jumps) js.push_back(rat_str(x));
    j["jumps"] = js;
    j["s"] = s();
    nlohmann::json rows = nlohmann::json::array();
    for (int a = 0; a < datum->num_roots(); ++a) {
        const auto& rp = roots[a];
        rows.push_back({{"root", datum->root(a)},
                        {"m", rp.m},
                        {"eps", rat_str(rp.eps)},
                        {"reductive", rp.reductive},
                        {"jump_index", rp.jump}});
    }
    j["roots"] = rows;
    return j;
}

int affine_index(const FiltrationProfile& prof, int alpha, int a, int r)
{
    if (r < 1 || a < 0 || a > r) throw DomainError("affine_index: need r >= 1 and 0 <= a <= r");
    const auto& rp = prof.at(alpha);
    if (a == 0) return rp.m;
    return rp.reductive ? rp.m + a : rp.m + a - 1;
}

Rat evaluate(const RootDatum& datum, const AffineRoot& psi, const RatVec& v)
{
    return datum.pair(datum.root(psi.alpha), v) + Rat(psi.m);
}

TwistedFrobenius untwisted_frobenius(const RootDatum& datum, int q)
{
    TwistedFrobenius s;
    s.q = q;
    s.action = datum.weyl_elements().front();
    s.shift.assign(datum.dim(), Rat(0));
    return s;
}

AffineRoot affine_frobenius(const RootDatum& datum, const TwistedFrobenius& sigma, const AffineRoot& psi)
{
    int image = sigma.action.perm.at(psi.alpha);
    Rat c = datum.pair(datum.root(image), sigma.shift);
    if (c.denominator() != 1)
        throw ConfigError("basepoint shift pairs non-integrally with root " + root_str(datum.root(image)));
    return {image, psi.m - c.numerator()};
}

RatVec frobenius_point(const RootDatum& datum, const TwistedFrobenius& sigma, const RatVec& v)
{
    RatVec w = datum.act_cochar(sigma.action, v);
    for (int i = 0; i < datum.dim(); ++i) w[i] += sigma.shift[i];
    return w;
}

bool is_sigma_stable(const RootDatum& datum, const TwistedFrobenius& sigma, const RatVec& v)
{
    RatVec w = frobenius_point(datum, sigma, v);
    for (int a = 0; a < datum.num_roots(); ++a)
        if (datum.pair(datum.root(a), w) != datum.pair(datum.root(a), v)) return false;
    return true;
}

EpsMsReport check_eps_ms(const RootDatum& datum, const FiltrationProfile& prof)
{
    EpsMsReport rep;
    for (int a = 0; a < datum.num_roots(); ++a)
        for (int b = 0; b < datum.num_roots(); ++b) {
            if (datum.neg(a) == b) continue;
            for (const auto& sp : datum.root_string_pairs(a, b)) {
                ++rep.instances;
                long long lhs = static_cast<long long>(sp.p) * prof.m(a) + static_cast<long long>(sp.q) * prof.m(b) -
                                prof.m(sp.gamma);
                long long rhs = floor_rat(Rat(sp.p) * prof.eps(a) + Rat(sp.q) * prof.eps(b));
                if (rhs >= 1) ++rep.floor_positive;
                if (lhs != rhs || lhs < 0) rep.violations.push_back({a, b, sp.p, sp.q, sp.gamma, lhs, rhs});
            }
        }
    return rep;
}

RatVec point_from_simple_pairings(const RootDatum& datum, const RatVec& c)
{
    int n = datum.dim(), k = datum.rank();
    // rows: alpha_i^T P ; solve for v, free variables set to 0
    std::vector<RatVec> A(k, RatVec(n + 1, Rat(0)));
    for (int i = 0; i < k; ++i) {
        const IVec& a = datum.root(datum.simple()[i]);
        for (int col = 0; col < n; ++col) {
            int s = 0;
            for (int t = 0; t < n; ++t) s += a[t] * datum.pairing_matrix()[t][col];
            A[i][col] = s;
        }
        A[i][n] = c.at(i);
    }
    std::vector<int> pivcol;
    int row = 0;
    for (int col = 0; col < n && row < k; ++col) {
        int piv = -1;
        for (int i = row; i < k; ++i)
            if (A[i][col] != Rat(0)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[piv], A[row]);
        for (int i = 0; i < k; ++i) {
            if (i == row || A[i][col] == Rat(0)) continue;
            Rat f = A[i][col] / A[row][col];
            for (int j = col; j <= n; ++j) A[i][j] -= f * A[row][j];
        }
        pivcol.push_back(col);
        ++row;
    }
    RatVec v(n, Rat(0));
    for (int i = 0; i < row; ++i) v[pivcol[i]] = A[i][n] / A[i][pivcol[i]];
    return v;
}

std::vector<RatVec> alcove_points(const RootDatum& datum, int maxden)
{
    std::set<Rat> vals;
    for (int d = 1; d <= maxden; ++d)
        for (int k = 0; k <= d; ++k) vals.insert(Rat(k, d));
    std::vector<Rat> grid(vals.begin(), vals.end());

    // highest root: positive root of maximal height
    int top = -1, best = 0;
    for (int a : datum.positive_roots()) {
        int h = datum.height(a);
        if (h > best) {
            best = h;
            top = a;
        }
    }
    auto coeff = datum.simple_coefficients(top, {});
    int k = datum.rank();
    std::vector<RatVec> out;
    std::vector<int> idx(k, 0);
    while (true) {
        RatVec c(k);
        Rat sum = 0;
        for (int i = 0; i < k; ++i) {
            c[i] = grid[idx[i]];
            sum += Rat(coeff[i]) * c[i];
        }
        if (sum <= Rat(1)) out.push_back(point_from_simple_pairings(datum, c));
        int i = 0;
        while (i < k && ++idx[i] == static_cast<int>(grid.size())) idx[i++] = 0;
        if (i == k) break;
    }
    return out;
}

}  // namespace dlpar
