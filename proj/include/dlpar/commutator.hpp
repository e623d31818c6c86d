#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "dlpar/apartment.hpp"

namespace dlpar {

struct AffineLevel {
    int alpha;
    long long index;
    bool operator==(const AffineLevel& o) const { return alpha == o.alpha && index == o.index; }
};

// {(p alpha + q beta, p i_1 + q i_2)} over the root strings of the two vector parts
std::vector<AffineLevel> commutator_support(const RootDatum& datum, const AffineLevel& l1, const AffineLevel& l2);

// level of [T^r, U_{alpha,m}]
inline long long torus_commutator_level(long long m, long long r) { return m + r; }

struct Witness {
    std::string check;
    std::string family, alpha, beta, point;
    int p = 0, q = 0, a = 0, r = 0, i = 0;
    long long lhs = 0, rhs = 0;
    nlohmann::json to_json() const;
};

struct ContainmentReport {
    std::string check;
    bool experimental = false;
    long long instances = 0;
    std::map<std::string, long long> branches;
    std::vector<Witness> violations;

    void hit(const std::string& branch) { ++branches[branch]; }
    void merge(const ContainmentReport& o);
    bool ok() const { return violations.empty(); }
    nlohmann::json to_json(size_t max_witnesses = 20) const;
};

ContainmentReport certify_eps_ms(const FiltrationProfile& prof);
ContainmentReport certify_lemma_comm(const FiltrationProfile& prof, int r);
ContainmentReport certify_jump_filtration(const FiltrationProfile& prof, int r);
// pairing containments (both parts) and the two commutator containments behind the
// torus-producing commutator, over every positive system
ContainmentReport certify_pairings(const FiltrationProfile& prof, int r);
// generalized duality pairing; reported, never counted as a failure
ContainmentReport certify_duality(const FiltrationProfile& prof, int r);

// all positive systems w(Phi^+), w in W, deduplicated, in Weyl enumeration order
std::vector<std::vector<int>> positive_systems(const RootDatum& datum);

struct SweepConfig {
    std::vector<std::string> families{"A1", "A2", "A3", "C2", "G2"};
    int max_denominator = 6;
    int r_max = 5;
    int workers = 1;
};

struct SweepResult {
    std::vector<ContainmentReport> reports;  // eps_ms, comm, jump, pairings, duality
    long long points = 0;
    double seconds = 0;
    nlohmann::json to_json() const;
};

SweepResult symbolic_sweep(const SweepConfig& cfg);

}  // namespace dlpar
