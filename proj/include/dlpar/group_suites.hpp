#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dlpar/parahoric.hpp"

namespace dlpar {

struct SuiteReport {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::vector<nlohmann::json> samples;  // first few failures
    void fail(nlohmann::json j);
    bool ok() const { return failures == 0 && checks > 0; }
    nlohmann::json to_json() const;
};

// [xi, x] = 1 for xi in U_alpha^{r-a} and x a generator of G^{a+1} (alpha non-reductive) or G^a
SuiteReport suite_commutator_vanishing(const GroupModel& M, int n = 1);
// G^{1,i} normal in G^1 with abelian quotients G^{1,i}/G^{1,i+1}; G^a/G^{a+1} abelian for a >= 2
SuiteReport suite_jump_normality(const GroupModel& M, int n = 1);
// every g in G_{r,w} is u z w tau u' with z in K^1(w); split torus, standard Borel
SuiteReport suite_bruhat_factorization(const GroupModel& M);
// strata computed with three root orders agree; A_z non-empty; the level-1 clause holds
SuiteReport suite_stratum_orders(const GroupModel& M);
// [xi, z] lies in T^alpha N^{-, r-1} and xi -> projection is a bijection onto T^alpha(F_q)
SuiteReport suite_torus_commutator(const GroupModel& M);

}  // namespace dlpar
