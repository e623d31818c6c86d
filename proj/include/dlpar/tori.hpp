#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "dlpar/cyclotomic.hpp"
#include "dlpar/parahoric.hpp"

namespace dlpar {

// T_r = h (split T_r) h^{-1}; sigma acts on split coordinates by s -> n0 F(s) n0^{-1}
struct RationalTorus {
    std::string label;
    int w = 0;       // index in weyl_x()
    int level = 1;   // h is defined over F_{q^level}
    GroupElement h, hinv, n0;
    std::vector<GroupElement> split_points;  // sorted
    std::vector<GroupElement> gens;          // split coordinates
    std::vector<int> orders;                 // prime powers
    int exponent = 1;
    std::unordered_map<GroupElement, std::vector<int>, ElementHash> log;

    size_t size() const { return split_points.size(); }
    // split coordinates of a point of T_r
    GroupElement to_split(const GroupModel& M, const GroupElement& t) const { return M.mul(M.mul(hinv, t), h); }
    GroupElement from_split(const GroupModel& M, const GroupElement& s) const { return M.mul(M.mul(h, s), hinv); }
    bool contains_split(const GroupElement& s) const { return log.count(s) > 0; }
    // sigma on split coordinates
    GroupElement sigma_split(const GroupModel& M, const GroupElement& s) const;
    nlohmann::json to_json(const GroupModel& M) const;
};

// one representative per conjugacy class of W_x, identity first
std::vector<int> weyl_class_reps(const GroupModel& M);
int weyl_order(const GroupModel& M, int w);

// Lang search over constant matrices at reductive positions over F_{q^n}, n = order of w
RationalTorus realize_torus(const GroupModel& M, int w, long long budget = 10000000);

// exponent vector with respect to the torus generators
struct Character {
    std::vector<int> exps;
    bool operator==(const Character& o) const { return exps == o.exps; }
    bool operator<(const Character& o) const { return exps < o.exps; }
};

std::vector<Character> characters_of(const RationalTorus& T);
// theta(s) = zeta_N^{value_exponent}, N = T.exponent
long long value_exponent(const RationalTorus& T, const Character& c, const GroupElement& split);
Cyclo value(const RationalTorus& T, const Character& c, const GroupElement& split);
nlohmann::json character_json(const Character& c);

struct RegularityReport {
    bool regular = false;
    std::vector<int> tested_m;   // divisors m of the ambient level checked
    std::vector<int> skipped_m;  // within the bound but outside the ambient field
    int failing_root = -1;
    nlohmann::json to_json(const GroupModel& M) const;
};
RegularityReport is_regular(const GroupModel& M, const RationalTorus& T, const Character& c);

enum class Tri { No, Yes, Indeterminate };
std::string tri_str(Tri t);

struct VeryRegularResult {
    Tri status = Tri::No;
    int torus = -1;
    GroupElement k;  // g = k t k^{-1}
    GroupElement t;  // point of the torus (not split coordinates)
    nlohmann::json to_json(const GroupModel& M) const;
};

// very regular points of the realized tori, up to conjugation in G_r(F_q)
class VeryRegularIndex {
public:
    VeryRegularIndex(const GroupModel& M, const std::vector<const RationalTorus*>& tori,
                     const std::vector<GroupElement>& rational_group, bool complete);
    VeryRegularResult query(const GroupElement& g) const;
    size_t size() const { return map_.size(); }

private:
    const GroupModel& M_;
    bool complete_;
    std::unordered_map<GroupElement, VeryRegularResult, ElementHash> map_;
};

// root values of a split-coordinate point are all nontrivial modulo t
bool split_very_regular(const GroupModel& M, const GroupElement& s);

// W_x(T, T') as transporters n_v = h' v h^{-1}, v in W_x
struct TorsorElement {
    int v = 0;
    GroupElement n;
    int sigma_image = -1;  // index v' with sigma(n_v) in n_{v'} T_r
    bool fixed() const { return sigma_image == v; }
};
std::vector<TorsorElement> torsor(const GroupModel& M, const RationalTorus& T, const RationalTorus& Tp);

// t' -> theta(n^{-1} t' n) on T'^sigma; verifies independence of the lift over random torus cosets
Character ad_character(const GroupModel& M, const RationalTorus& T, const RationalTorus& Tp, const TorsorElement& v,
                       const Character& theta, int lift_trials = 2);

// all points of G_r(F_q) (sigma-fixed, level-0 pattern), sorted
std::vector<GroupElement> rational_points(const GroupModel& M, long long budget = 100000000);

}  // namespace dlpar
