#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dlpar/rational.hpp"
#include "dlpar/root_datum.hpp"

namespace dlpar {

struct RootProfile {
    int m = 0;
    Rat eps = 0;
    bool reductive = true;
    int jump = 0;  // i with the root in Phi_i, 1-based
};

// Filtration data of an apartment point v = x - x_0.  Holds a pointer to the
// datum, which must outlive the profile.
struct FiltrationProfile {
    const RootDatum* datum = nullptr;
    RatVec v;
    std::vector<RootProfile> roots;
    std::vector<Rat> jumps;  // eps_1 < ... < eps_s < eps_{s+1} = 1
    std::vector<std::vector<int>> phi;  // phi[i-1] = Phi_i

    int s() const { return static_cast<int>(jumps.size()) - 1; }
    const RootProfile& at(int a) const { return roots.at(a); }
    int m(int a) const { return roots.at(a).m; }
    const Rat& eps(int a) const { return roots.at(a).eps; }
    bool red(int a) const { return roots.at(a).reductive; }
    // eps_i for 1 <= i <= s+1
    const Rat& jump(int i) const { return jumps.at(i - 1); }

    nlohmann::json to_json() const;
};

FiltrationProfile profile(const RootDatum& datum, const RatVec& v);

// valuation index presenting U^a_{alpha,r}; a = r gives the vanishing threshold
int affine_index(const FiltrationProfile& prof, int alpha, int a, int r);

struct AffineRoot {
    int alpha;
    long long m;
    bool operator==(const AffineRoot& o) const { return alpha == o.alpha && m == o.m; }
};

Rat evaluate(const RootDatum& datum, const AffineRoot& psi, const RatVec& v);

struct TwistedFrobenius {
    int q = 0;
    WeylElement action;  // lattice part of sigma
    RatVec shift;        // sigma(x_0) - x_0
};

TwistedFrobenius untwisted_frobenius(const RootDatum& datum, int q);

// (alpha, m) -> (sigma alpha, m - <sigma alpha, sigma(x_0) - x_0>)
AffineRoot affine_frobenius(const RootDatum& datum, const TwistedFrobenius& sigma, const AffineRoot& psi);

// offset of sigma(x), with x = x_0 + v
RatVec frobenius_point(const RootDatum& datum, const TwistedFrobenius& sigma, const RatVec& v);

// every root pairs identically with v and its Frobenius image
bool is_sigma_stable(const RootDatum& datum, const TwistedFrobenius& sigma, const RatVec& v);

struct EpsMsViolation {
    int alpha, beta, p, q, gamma;
    long long lhs, rhs;
};

struct EpsMsReport {
    long long instances = 0;
    long long floor_positive = 0;  // cases with floor(p eps_a + q eps_b) >= 1
    std::vector<EpsMsViolation> violations;
};

EpsMsReport check_eps_ms(const RootDatum& datum, const FiltrationProfile& prof);

// points of the closed fundamental alcove whose pairings with the simple roots
// have denominators at most maxden
std::vector<RatVec> alcove_points(const RootDatum& datum, int maxden);

// the cocharacter-space point with prescribed pairings against the simple roots
RatVec point_from_simple_pairings(const RootDatum& datum, const RatVec& c);

}  // namespace dlpar
