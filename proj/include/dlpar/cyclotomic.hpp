#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dlpar/rational.hpp"

namespace dlpar {

// integer coefficients of the N-th cyclotomic polynomial, lowest degree first
const std::vector<long long>& cyclotomic_poly(int N);

// Element of Q(zeta_N) stored as sum c_k zeta_N^k, 0 <= k < N.  Equality and
// serialization go through the reduction modulo Phi_N.
class Cyclo {
public:
    explicit Cyclo(int N = 1);
    static Cyclo zeta(int N, long long k);
    static Cyclo rational(const Rat& r, int N = 1);

    int order() const { return N_; }
    const std::vector<Rat>& raw() const { return c_; }
    // same number viewed in Q(zeta_M), N | M
    Cyclo lift(int M) const;
    void add_zeta(long long k, const Rat& coeff = Rat(1));

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator*(const Rat& s) const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }
    // zeta -> zeta^{-1}
    Cyclo conj() const;
    // zeta -> zeta^k, gcd(k, N) = 1 not required
    Cyclo galois(long long k) const;

    // coordinates in the power basis 1, zeta, ..., zeta^{phi(N)-1}
    std::vector<Rat> reduced() const;
    bool is_zero() const;
    std::optional<Rat> as_rational() const;
    std::string str() const;
    nlohmann::json to_json() const;

private:
    int N_;
    std::vector<Rat> c_;
};

long long lcm_ll(long long a, long long b);

}  // namespace dlpar
