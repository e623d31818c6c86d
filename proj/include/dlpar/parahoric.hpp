#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "dlpar/apartment.hpp"
#include "dlpar/field.hpp"
#include "dlpar/root_datum.hpp"

namespace dlpar {

struct GroupSpec {
    std::string family = "GL";  // GL, SL or Sp
    int n = 2;                   // matrix size
    int q = 2;
    int r = 1;
    RatVec x;          // x - x_0 in cocharacter coordinates; empty means x_0
    int ambient = 1;   // coefficients live in F_{q^ambient}
    // optional inner twist sigma(g) = b F(g) b^{-1} with b e_j = t^{twist_pow[j]} e_{twist_perm[j]}
    std::vector<int> twist_perm;
    std::vector<int> twist_pow;
};

// Matrix of truncated series in the adapted basis g' = D g D^{-1},
// D = diag(t^{c_k}); flat layout [(i * n + j) * L + k].
struct GroupElement {
    std::vector<int> c;
    bool operator==(const GroupElement& o) const { return c == o.c; }
    bool operator!=(const GroupElement& o) const { return c != o.c; }
    bool operator<(const GroupElement& o) const { return c < o.c; }
};

struct ElementHash {
    size_t operator()(const GroupElement& g) const
    {
        uint64_t h = 1469598103934665603ull;
        for (int v : g.c) h = (h ^ static_cast<uint64_t>(v + 1)) * 1099511628211ull;
        return static_cast<size_t>(h);
    }
};

using ElementSet = std::unordered_set<GroupElement, ElementHash>;

// Filtration levels per root plus a diagonal level; level r means "trivial".
struct Levels {
    int diag = 0;
    std::vector<int> root;
    int top_alpha = -1;  // restrict the diagonal further to T^{alpha, r-1}
};

struct Descriptor {
    enum class Kind { G, Gai, T, Root, Unipotent, Nai, Borel, K1, Top, TopAlpha };
    Kind kind = Kind::G;
    int a = 0;
    int i = 0;
    int alpha = -1;
    std::vector<int> system;  // positive system for Unipotent, Nai, Borel, K1
    int w = 0;                // index into weyl_x() for K1

    static Descriptor make(Kind k, int a = 0, int i = 0, int alpha = -1, std::vector<int> sys = {}, int w = 0)
    {
        Descriptor d;
        d.kind = k;
        d.a = a;
        d.i = i;
        d.alpha = alpha;
        d.system = std::move(sys);
        d.w = w;
        return d;
    }
    static Descriptor G(int a) { return make(Kind::G, a); }
    static Descriptor Gai(int a, int i) { return make(Kind::Gai, a, i); }
    static Descriptor H(int i) { return make(Kind::Gai, 1, i); }
    static Descriptor T(int a) { return make(Kind::T, a); }
    static Descriptor U(int alpha, int a) { return make(Kind::Root, a, 0, alpha); }
    static Descriptor N(std::vector<int> sys, int a) { return make(Kind::Unipotent, a, 0, -1, std::move(sys)); }
    static Descriptor Nai(std::vector<int> sys, int a, int i) { return make(Kind::Nai, a, i, -1, std::move(sys)); }
    static Descriptor B(std::vector<int> sys) { return make(Kind::Borel, 0, 0, -1, std::move(sys)); }
    static Descriptor K1(std::vector<int> sys, int w) { return make(Kind::K1, 1, 0, -1, std::move(sys), w); }
    static Descriptor Top() { return make(Kind::Top); }
    static Descriptor TopAlpha(int alpha) { return make(Kind::TopAlpha, 0, 0, alpha); }

    std::string label() const;
};

struct Stratum {
    int a = 0;
    int i = 0;               // jump index when a = 1
    std::vector<int> A;      // A_z
    std::vector<int> I;      // I_z
    bool moreover = true;    // for a = 1: no root of an earlier jump has depth 1
    bool operator==(const Stratum& o) const { return a == o.a && i == o.i && A == o.A && I == o.I; }
};

struct IwahoriParts {
    GroupElement lower, torus, upper;
};

struct LambdaResult {
    bool member = false;       // [xi, z] in T^alpha N^{-, r-1}
    GroupElement commutator;
    GroupElement torus_part;
};

class GroupModel {
public:
    explicit GroupModel(const GroupSpec& spec);
    GroupModel(const GroupModel&) = delete;
    GroupModel& operator=(const GroupModel&) = delete;

    const GroupSpec& spec() const { return spec_; }
    const RootDatum& datum() const { return datum_; }
    const FiltrationProfile& prof() const { return prof_; }
    const Field& field() const { return *F_; }
    int p() const { return F_->p(); }
    int q() const { return spec_.q; }
    int d() const { return d_; }  // q = p^d
    int r() const { return spec_.r; }
    int size() const { return n_; }
    int L() const { return L_; }
    int ambient() const { return spec_.ambient; }

    // ambient encodings of F_{q^n}, ascending
    const std::vector<int>& subfield(int n) const;
    // an F_p-basis of F_{q^n}
    std::vector<int> subfield_basis(int n) const;
    int subfield_generator(int n) const;

    // valuation bound of adapted entry (i, j) at level a; diagonal: bound on g_ii - 1
    int bound(int i, int j, int a) const;
    int theta(int i, int j) const { return bound(i, j, spec_.r); }
    int tau0(int i, int j) const { return bound(i, j, 0); }
    int root_at(int i, int j) const { return root_at_[i * n_ + j]; }
    const std::vector<Rat>& weights() const { return w_; }
    const std::vector<int>& shifts() const { return c_; }
    // positions of the root; the first is primary
    const std::vector<std::pair<int, int>>& positions(int alpha) const { return pos_[alpha]; }
    int secondary_sign(int alpha) const { return sec_sign_[alpha]; }
    // adapted secondary entry = sign * t^{secondary_shift} * primary entry
    int secondary_shift(int alpha) const { return sec_shift_[alpha]; }

    // element access
    int coef(const GroupElement& g, int i, int j, int k) const { return g.c[(i * n_ + j) * L_ + k]; }
    TruncatedSeries entry(const GroupElement& g, int i, int j) const;
    void set_entry(GroupElement& g, int i, int j, const TruncatedSeries& s) const;

    GroupElement identity() const;
    GroupElement zero_matrix() const;
    GroupElement canonical(GroupElement g) const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    // a^{-1} b^{-1} a b
    GroupElement commutator(const GroupElement& a, const GroupElement& b) const;
    GroupElement pow(const GroupElement& a, long long e) const;
    TruncatedSeries det(const GroupElement& g) const;
    bool in_group(const GroupElement& g) const;
    bool is_identity(const GroupElement& g) const { return g == identity(); }
    bool is_diagonal(const GroupElement& g) const;
    // smallest field level n (dividing ambient) containing all coefficients
    int field_level(const GroupElement& g) const;

    // u_alpha(e) with e the adapted primary entry
    GroupElement root_element_adapted(int alpha, const TruncatedSeries& e) const;
    // u_alpha(t^shift y), y in original coordinates; v(t^shift y) >= m_alpha required
    GroupElement root_element(int alpha, const TruncatedSeries& y, int shift = 0) const;
    // lambda(u) for a cocharacter lambda and a unit u
    GroupElement cochar_element(const IVec& lambda, const TruncatedSeries& u) const;
    GroupElement diagonal(const std::vector<TruncatedSeries>& d) const;
    // Z-basis of the cocharacter lattice of the diagonal torus
    const std::vector<IVec>& torus_basis() const { return torus_basis_; }
    // weight of the k-th basis vector
    const IVec& weight(int k) const { return weights_[k]; }

    // coefficientwise x -> x^q, composed with the inner twist
    GroupElement frobenius(const GroupElement& g, int power = 1) const;
    bool has_twist() const { return !spec_.twist_perm.empty(); }
    int sigma_root(int alpha) const { return sigma_root_[alpha]; }

    // descriptors
    Levels levels(const Descriptor& d) const;
    Levels sigma(const Levels& l) const;
    bool member(const GroupElement& g, const Descriptor& d) const { return member(g, levels(d)); }
    bool member(const GroupElement& g, const Levels& l) const;
    std::vector<GroupElement> generators(const Levels& l, int n) const;
    std::vector<GroupElement> generators(const Descriptor& d, int n) const { return generators(levels(d), n); }
    // all group elements over F_{q^n} fitting the pattern
    ElementSet enumerate_pattern(const Levels& l, int n, long long budget = 100000000) const;
    ElementSet enumerate_closure(const std::vector<GroupElement>& gens, long long budget = 100000000) const;
    // pattern enumeration; with cross_check the generator closure must agree
    ElementSet enumerate(const Descriptor& d, int n, long long budget = 100000000, bool cross_check = false) const;
    // level-a depth of an element: the largest a with g in G^a
    int depth(const GroupElement& g) const;

    // W_x as group elements: signed permutation matrices in the adapted basis
    const std::vector<WeylElement>& weyl_x() const { return weyl_x_; }
    const std::vector<int>& weyl_perm(int w) const { return weyl_perm_[w]; }
    const GroupElement& weyl_rep(int w) const { return weyl_rep_[w]; }
    // index in weyl_x of the Bruhat cell of the image in G_1 (standard Borel)
    int bruhat_component(const GroupElement& g) const;
    // g = lower * torus * upper for the standard positive system, g in G^a
    IwahoriParts iwahori_decompose(const GroupElement& g, int a) const;
    // plain LDU with unit pivots; false if a pivot is not a unit
    bool ldu(const GroupElement& g, IwahoriParts& out) const;

    // z = prod_{beta in order} u_beta(e_beta) for z in the unipotent group of the system;
    // returns adapted primary entries indexed by root
    std::vector<TruncatedSeries> factor_unipotent(const GroupElement& z, const std::vector<int>& system,
                                                  const std::vector<int>& order) const;
    GroupElement multiply_out(const std::vector<TruncatedSeries>& coords, const std::vector<int>& order) const;
    // a(beta, .) for an adapted primary entry
    int root_depth(int beta, const TruncatedSeries& e) const;
    Stratum stratum(const GroupElement& z, const std::vector<int>& system, const std::vector<int>& order) const;
    // [xi, z] and its projection to T^alpha, with N^- the unipotent group of -system
    LambdaResult lambda_eval(const GroupElement& z, const GroupElement& xi, int alpha,
                             const std::vector<int>& system) const;

    nlohmann::json to_json(const GroupElement& g) const;
    std::string encode(const GroupElement& g) const;
    // inverse of to_json; throws MembershipError unless the result lies in G_r
    GroupElement from_json(const nlohmann::json& j) const;

    std::vector<int> standard_positive() const { return datum_.positive_roots(); }
    std::vector<int> opposite(const std::vector<int>& system) const;

private:
    void check_pattern() const;
    void build_weyl();
    void build_twist();
    bool symplectic(const GroupElement& g) const;
    GroupElement star(const GroupElement& g) const;
    void shift_into(std::vector<int>& dst, int dst_off, const TruncatedSeries& s, int shift, int limit) const;

    GroupSpec spec_;
    RootDatum datum_;
    FiltrationProfile prof_;
    const Field* F_ = nullptr;
    int d_ = 1;
    int n_ = 0, L_ = 1;
    std::vector<IVec> weights_;
    std::vector<Rat> w_;
    std::vector<int> c_;
    std::vector<int> bar_;  // i -> index of the dual basis vector (Sp)
    std::vector<int> root_at_;
    std::vector<int> tau0_;
    std::vector<std::vector<std::pair<int, int>>> pos_;
    std::vector<int> sec_sign_, sec_shift_;
    std::vector<IVec> torus_basis_;
    mutable std::vector<std::vector<int>> subfields_;
    std::vector<WeylElement> weyl_x_;
    std::vector<std::vector<int>> weyl_perm_;
    std::vector<GroupElement> weyl_rep_;
    // twist in the adapted basis: b' e_j = t^{tw_exp_[j]} e_{tw_perm_[j]}
    std::vector<int> tw_perm_, tw_exp_;
    std::vector<int> sigma_root_;
};

}  // namespace dlpar
