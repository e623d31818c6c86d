#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "dlpar/cyclotomic.hpp"
#include "dlpar/group_suites.hpp"
#include "dlpar/parahoric.hpp"
#include "dlpar/tori.hpp"

namespace dlpar {

// G_r(F_q), one realized torus per conjugacy class of W_x, and the very regular index
class Setting {
public:
    explicit Setting(const GroupModel& M, long long budget = 100000000);
    const GroupModel& model() const { return M_; }
    const std::vector<RationalTorus>& tori() const { return tori_; }
    const RationalTorus& torus(int i) const { return tori_.at(i); }
    const std::vector<GroupElement>& group() const { return G_; }
    const std::vector<GroupElement>& inverses() const { return Ginv_; }
    VeryRegularResult very_regular(const GroupElement& g) const { return vr_->query(g); }
    // deterministic sample of very regular elements whose centralizer is conjugate to torus i
    std::vector<GroupElement> very_regular_sample(int torus, size_t limit) const;

private:
    const GroupModel& M_;
    std::vector<RationalTorus> tori_;
    std::vector<GroupElement> G_, Ginv_;
    std::unique_ptr<VeryRegularIndex> vr_;
};

// sum over sigma-fixed w in W_x(T, Z(g)) of theta(w^{-1} g w)
Cyclo trace_prediction(const Setting& S, int torus, const Character& theta, const GroupElement& g);

struct InnerProduct {
    long long count = 0;
    bool hypothesis = false;  // one of the characters is regular
};
InnerProduct inner_product_prediction(const Setting& S, int T, const Character& theta, int Tp, const Character& thetap);

// x with x^{-1} sigma(x) in U, g x in x T^sigma over F_{q^n}, split by the unique w with x in w B
struct FixedPointClass {
    int v = 0;                  // index into W_x(T, Z(g))
    bool sigma_fixed = false;
    std::vector<GroupElement> points;
    bool equals_coset = false;  // points = w T^sigma with a sigma-fixed lift w
};
struct FixedPointReport {
    int level = 1;
    long long candidates = 0;
    long long witnesses = 0;
    long long uniqueness_failures = 0;  // witnesses lying in no or several cells w B
    std::vector<FixedPointClass> classes;
    bool ok() const;
    nlohmann::json to_json(const GroupModel& M, bool with_points = false) const;
};
// {x in G_r(F_{q^n}) : x^{-1} sigma(x) in U, x^{-1} g x in T^sigma}, any g; candidates counts scanned solutions
std::vector<GroupElement> lang_fixed_set(const Setting& S, int torus, const GroupElement& g, int n,
                                         long long budget = 100000000, long long* candidates = nullptr);
// g very regular: the set above split by the cells (k n_v) B, k from the certificate of g
FixedPointReport fixed_points(const Setting& S, int torus, const GroupElement& g, int n, long long budget = 100000000);
// the same set by scanning G_r(F_q) directly (n = 1 only)
std::vector<GroupElement> fixed_points_scan(const Setting& S, int torus, const GroupElement& g);

// all v with x in (k n_v) B, for g very regular in x B x^{-1}; exactly one is expected
std::vector<int> borel_conjugacy_witness(const Setting& S, int torus, const GroupElement& g, const GroupElement& x);

// h in U(F_{q^n}) commuting with a very regular point of the split torus is trivial
SuiteReport suite_torus_fixing(const Setting& S, int n = 1);

// Ind from B^sigma of theta (split torus, hyperspecial point)
Cyclo induced_character(const Setting& S, const Character& theta, const GroupElement& g);
std::vector<Cyclo> induced_characters(const Setting& S, const std::vector<Character>& thetas, const GroupElement& g);

struct CharacterTable {
    long long group_order = 0;
    int exponent = 1;
    long long prime = 0;
    std::vector<GroupElement> reps;
    std::vector<long long> sizes;
    std::vector<int> inverse_class;
    std::vector<int> degrees;
    // values[chi][class] as multiplicities of zeta_e^k
    std::vector<std::vector<std::vector<int>>> values;
    std::unordered_map<GroupElement, int, ElementHash> class_of;

    size_t classes() const { return reps.size(); }
    Cyclo value(int chi, int cls) const;
    // exact row and column orthogonality and sum of squared degrees
    bool orthogonality(std::string* why = nullptr) const;
    nlohmann::json to_json(const GroupModel& M) const;
};
CharacterTable character_table(const GroupModel& M, const std::vector<GroupElement>& G, long long budget = 10000);

struct MatchReport {
    std::vector<int> very_regular_classes;
    struct Hit {
        int chi;
        int sign;
    };
    std::vector<Hit> matches;
    // distinct irreducibles among the matches
    size_t irreducibles() const;
    nlohmann::json to_json(const CharacterTable& tab) const;
};
MatchReport match_irreducible(const Setting& S, const CharacterTable& tab, int torus, const Character& theta);

struct LevelChange {
    long long induced_dim = 0;    // [G_s : B_s]
    long long inflated_dim = 0;   // [G_s : B_s G_s^{r}]
    long long predicted_induced = 0, predicted_inflated = 0;
    bool ok() const
    {
        return induced_dim > inflated_dim && induced_dim == predicted_induced && inflated_dim == predicted_inflated;
    }
    nlohmann::json to_json() const;
};
// GL_n hyperspecial, theta of level r - 1 inflated to level s
LevelChange level_compare(const std::string& family, int n, int q, int r, int s);

}  // namespace dlpar
