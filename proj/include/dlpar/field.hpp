#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dlpar {

struct PrimitivePoly {
    int p;
    int n;
    std::vector<int> low;  // coefficients c_0..c_{n-1} of the monic polynomial
};

const std::vector<PrimitivePoly>& primitive_polys();

// F_{p^n} with elements encoded as integers in [0, p^n): the digits in base p
// are the coordinates in the basis 1, x, ..., x^{n-1} modulo the shipped
// primitive polynomial.  Multiplication goes through log/exp tables.
class Field {
public:
    Field(int p, int n);

    // shared instance, created on first use
    static const Field& get(int p, int n);
    static const Field& of_order(int q);

    int p() const { return p_; }
    int n() const { return n_; }
    int size() const { return size_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const
    {
        if (p_ == 2) return a ^ b;
        if (!add_.empty()) return add_[a * size_ + b];
        return add_digits(a, b, 1);
    }
    int sub(int a, int b) const
    {
        if (p_ == 2) return a ^ b;
        return add_digits(a, b, p_ - 1);
    }
    int neg(int a) const { return sub(0, a); }
    int mul(int a, int b) const
    {
        if (a == 0 || b == 0) return 0;
        int e = log_[a] + log_[b];
        if (e >= size_ - 1) e -= size_ - 1;
        return exp_[e];
    }
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long long e) const;
    // x -> x^{p^k}
    int frob(int a, int k) const;
    int log(int a) const { return log_[a]; }
    int exp(long long i) const;
    int generator() const { return exp_[1 % (size_ - 1)]; }
    // the image of the integer k under Z -> F_p
    int from_int(long long k) const;
    // order of a in the multiplicative group
    long long order(int a) const;

    // elements of the subfield of order p^d, d | n, sorted ascending
    std::vector<int> subfield(int d) const;
    bool in_subfield(int a, int d) const { return frob(a, d) == a; }

private:
    int add_digits(int a, int b, int scale) const;

    int p_, n_, size_;
    std::vector<int> modulus_;
    std::vector<int> log_, exp_;
    std::vector<uint16_t> add_;
};

// F_q = F_{p^d} and its extensions F_{q^n}, 1 <= n <= nmax, with the embedding
// F_{q^k} -> F_{q^m} (k | m) sending x to the smallest root of the defining
// polynomial of F_{q^k}.
class FieldTower {
public:
    FieldTower(int p, int d, int nmax);

    int q() const { return q_; }
    int levels() const { return static_cast<int>(levels_.size()); }
    const Field& level(int n) const { return *levels_.at(n - 1); }
    int embed(int a, int from, int to) const;
    // x -> x^q on level n
    int frobenius(int a, int n, int power = 1) const;

private:
    int p_, d_, q_;
    std::vector<const Field*> levels_;
};

// Element of F[t]/t^M.  v(0) = M.
class TruncatedSeries {
public:
    TruncatedSeries(const Field& F, int M);
    TruncatedSeries(const Field& F, std::vector<int> coeffs);

    static TruncatedSeries constant(const Field& F, int M, int c);
    static TruncatedSeries monomial(const Field& F, int M, int c, int k);

    const Field& field() const { return *F_; }
    int order() const { return static_cast<int>(c_.size()); }
    int operator[](int k) const { return c_[k]; }
    const std::vector<int>& coeffs() const { return c_; }
    int valuation() const;
    bool is_unit() const { return !c_.empty() && c_[0] != 0; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries inv() const;
    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TruncatedSeries& o) const { return c_ != o.c_; }

    // coefficientwise x -> x^{p^k}
    TruncatedSeries frobenius(int k) const;
    std::string encode() const;

private:
    void check(const TruncatedSeries& o) const;
    const Field* F_;
    std::vector<int> c_;
};

// x -> x^{q^power} on each coefficient, q = p^d the base field order
TruncatedSeries coeff_frobenius(const TruncatedSeries& f, int d, int power);

}  // namespace dlpar
