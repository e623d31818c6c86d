#include "dlpar/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "dlpar/errors.hpp"

namespace dlpar {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

const std::vector<long long>& cyclotomic_poly(int N)
{
    static std::map<int, std::vector<long long>> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    if (N < 1) throw DomainError("cyclotomic order must be positive");
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, computed by exact division
    std::vector<long long> num(N + 1, 0);
    num[0] = -1;
    num[N] = 1;
    for (int d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        std::vector<long long> den = cyclotomic_poly(d);
        int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
        std::vector<long long> quo(dn - dd + 1, 0);
        for (int k = dn - dd; k >= 0; --k) {
            long long c = num[k + dd];  // den is monic
            quo[k] = c;
            for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
        }
        num = quo;
    }
    return cache[N] = num;
}

Cyclo::Cyclo(int N) : N_(N), c_(N, Rat(0))
{
    if (N < 1) throw DomainError("cyclotomic order must be positive");
}

Cyclo Cyclo::zeta(int N, long long k)
{
    Cyclo z(N);
    z.add_zeta(k);
    return z;
}

Cyclo Cyclo::rational(const Rat& r, int N)
{
    Cyclo z(N);
    z.c_[0] = r;
    return z;
}

void Cyclo::add_zeta(long long k, const Rat& coeff)
{
    long long m = ((k % N_) + N_) % N_;
    c_[m] += coeff;
}

Cyclo Cyclo::lift(int M) const
{
    if (M % N_ != 0) throw DomainError("lift target must be a multiple of the order");
    Cyclo out(M);
    int f = M / N_;
    for (int k = 0; k < N_; ++k) out.c_[k * f] = c_[k];
    return out;
}

Cyclo Cyclo::operator+(const Cyclo& o) const
{
    int M = static_cast<int>(lcm_ll(N_, o.N_));
    Cyclo a = lift(M), b = o.lift(M);
    for (int k = 0; k < M; ++k) a.c_[k] += b.c_[k];
    return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + o * Rat(-1); }

Cyclo Cyclo::operator*(const Cyclo& o) const
{
    int M = static_cast<int>(lcm_ll(N_, o.N_));
    Cyclo a = lift(M), b = o.lift(M), out(M);
    for (int i = 0; i < M; ++i) {
        if (a.c_[i] == Rat(0)) continue;
        for (int j = 0; j < M; ++j)
            if (b.c_[j] != Rat(0)) out.c_[(i + j) % M] += a.c_[i] * b.c_[j];
    }
    return out;
}

Cyclo Cyclo::operator*(const Rat& s) const
{
    Cyclo out = *this;
    for (auto& x : out.c_) x *= s;
    return out;
}

Cyclo Cyclo::conj() const { return galois(-1); }

Cyclo Cyclo::galois(long long k) const
{
    Cyclo out(N_);
    for (int i = 0; i < N_; ++i)
        if (c_[i] != Rat(0)) out.add_zeta(static_cast<long long>(i) * k, c_[i]);
    return out;
}

std::vector<Rat> Cyclo::reduced() const
{
    const auto& phi = cyclotomic_poly(N_);
    int deg = static_cast<int>(phi.size()) - 1;
    std::vector<Rat> r = c_;
    for (int k = N_ - 1; k >= deg; --k) {
        if (r[k] == Rat(0)) continue;
        Rat c = r[k];
        for (int j = 0; j <= deg; ++j) r[k - deg + j] -= c * Rat(phi[j]);
    }
    r.resize(deg);
    return r;
}

bool Cyclo::operator==(const Cyclo& o) const
{
    int M = static_cast<int>(lcm_ll(N_, o.N_));
    return (lift(M) - o.lift(M)).is_zero();
}

bool Cyclo::is_zero() const
{
    for (const auto& x : reduced())
        if (x != Rat(0)) return false;
    return true;
}

std::optional<Rat> Cyclo::as_rational() const
{
    // the power basis is a Q-basis, so only the constant coordinate may survive
    auto r = reduced();
    for (size_t k = 1; k < r.size(); ++k)
        if (r[k] != Rat(0)) return std::nullopt;
    return r.empty() ? Rat(0) : r[0];
}

std::string Cyclo::str() const
{
    auto r = reduced();
    std::string out;
    for (size_t k = 0; k < r.size(); ++k) {
        if (r[k] == Rat(0)) continue;
        if (!out.empty()) out += " + ";
        out += rat_str(r[k]);
        if (k > 0) out += "*z" + std::to_string(N_) + "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

nlohmann::json Cyclo::to_json() const
{
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : reduced()) c.push_back(rat_str(x));
    return {{"N", N_}, {"coeffs", c}};
}

}  // namespace dlpar
