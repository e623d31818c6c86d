#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "dlpar/rational.hpp"

namespace dlpar {

using IVec = std::vector<int>;
using IMat = std::vector<IVec>;  // row-major, square

struct WeylElement {
    IMat matrix;       // action on the cocharacter lattice
    IMat char_matrix;  // action on the character lattice
    std::vector<int> perm;  // perm[i] = index of w(root i)
    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
    bool operator<(const WeylElement& o) const { return matrix < o.matrix; }
};

class RootDatum {
public:
    // family in {GL, SL, Sp, A1, A2, A3, C2, G2}; n is the matrix size for GL/SL/Sp
    static RootDatum build(const std::string& family, int n = 0);

    const std::string& family() const { return family_; }
    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(simple_.size()); }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    const IVec& root(int i) const { return roots_.at(i); }
    const IVec& coroot(int i) const { return coroots_.at(i); }
    const std::vector<IVec>& roots() const { return roots_; }
    const std::vector<int>& simple() const { return simple_; }
    const IMat& pairing_matrix() const { return pairing_; }

    int pair(const IVec& chi, const IVec& lambda) const;
    Rat pair(const IVec& chi, const RatVec& lambda) const;
    // index of the root with these coordinates, or -1
    int find(const IVec& v) const;
    int neg(int i) const { return neg_.at(i); }
    bool is_positive(int i) const { return positive_.at(i); }
    std::vector<int> positive_roots() const;

    // coefficients of root i in the simple roots of the given positive system
    std::vector<int> simple_coefficients(int i, const std::vector<int>& positive_system) const;
    int height(int i, const std::vector<int>& positive_system) const;
    int height(int i) const { return height(i, positive_roots()); }

    struct StringPair {
        int p, q, gamma;
    };
    const std::vector<StringPair>& root_string_pairs(int a, int b) const;

    const std::vector<WeylElement>& weyl_elements() const { return weyl_; }
    WeylElement reflection(int i) const;
    WeylElement compose(const WeylElement& a, const WeylElement& b) const;  // a after b
    int weyl_index(const WeylElement& w) const;
    IVec act_cochar(const WeylElement& w, const IVec& lambda) const;
    RatVec act_cochar(const WeylElement& w, const RatVec& lambda) const;

    nlohmann::json to_json() const;

private:
    void finish();
    std::vector<StringPair> compute_strings(int a, int b) const;

    std::string family_;
    int dim_ = 0;
    IMat pairing_;
    std::vector<IVec> roots_, coroots_;
    std::vector<int> simple_;
    std::vector<int> neg_;
    std::vector<bool> positive_;
    std::vector<std::vector<StringPair>> strings_;
    std::map<IVec, int> index_;
    std::vector<WeylElement> weyl_;
};

std::string root_str(const IVec& v);

}  // namespace dlpar
