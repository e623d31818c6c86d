#include "dlpar/field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "dlpar/errors.hpp"

namespace dlpar {

namespace {

int ipow(int b, int e)
{
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

Field::Field(int p, int n) : p_(p), n_(n), size_(ipow(p, n))
{
    if (n < 1 || size_ > 4096) throw ConfigError("field order out of range");
    for (const auto& row : primitive_polys()) {
        if (row.p == p && row.n == n) modulus_ = row.low;
    }
    if (modulus_.empty()) throw ConfigError("no shipped polynomial for p=" + std::to_string(p) +
                                            " n=" + std::to_string(n));

    if (p != 2 && size_ <= 512) {
        add_.resize(static_cast<size_t>(size_) * size_);
        for (int a = 0; a < size_; ++a)
            for (int b = 0; b < size_; ++b) add_[a * size_ + b] = add_digits(a, b, 1);
    }

    // powers of x modulo the modulus, as digit vectors
    log_.assign(size_, -1);
    exp_.assign(size_ - 1, 0);
    std::vector<int> cur(n, 0);
    cur[0] = 1;
    for (int i = 0; i < size_ - 1; ++i) {
        int code = 0;
        for (int k = n - 1; k >= 0; --k) code = code * p + cur[k];
        exp_[i] = code;
        if (log_[code] != -1) throw ConfigError("shipped polynomial is not primitive");
        log_[code] = i;
        // multiply by x
        int top = cur[n - 1];
        for (int k = n - 1; k > 0; --k) cur[k] = cur[k - 1];
        cur[0] = 0;
        if (n == 1) cur[0] = 0;
        for (int k = 0; k < n; ++k) cur[k] = ((cur[k] - top * modulus_[k]) % p + p) % p;
    }
}

const Field& Field::get(int p, int n)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, n}];
    if (!slot) slot = std::make_unique<Field>(p, n);
    return *slot;
}

const Field& Field::of_order(int q)
{
    for (int p = 2; p <= q; ++p) {
        if (q % p) continue;
        int n = 0, m = q;
        while (m % p == 0) {
            m /= p;
            ++n;
        }
        if (m != 1) break;
        return get(p, n);
    }
    throw ConfigError("not a prime power: " + std::to_string(q));
}

int Field::add_digits(int a, int b, int scale) const
{
    int res = 0, place = 1;
    for (int k = 0; k < n_; ++k) {
        int da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        res += ((da + scale * db) % p_) * place;
        place *= p_;
    }
    return res;
}

int Field::inv(int a) const
{
    if (a == 0) throw ArithmeticError("inverse of zero");
    int e = log_[a];
    return exp_[e == 0 ? 0 : size_ - 1 - e];
}

int Field::exp(long long i) const
{
    long long m = size_ - 1;
    i %= m;
    if (i < 0) i += m;
    return exp_[i];
}

int Field::pow(int a, long long e) const
{
    if (e == 0) return 1;
    if (a == 0) {
        if (e < 0) throw ArithmeticError("inverse of zero");
        return 0;
    }
    long long m = size_ - 1;
    long long k = (static_cast<long long>(log_[a]) * (e % m)) % m;
    return exp(k);
}

int Field::frob(int a, int k) const
{
    if (a == 0) return 0;
    long long m = size_ - 1;
    long long e = 1;
    for (int i = 0; i < k % n_; ++i) e = e * p_ % m;
    if (m == 1) return a;
    return exp(log_[a] * e % m);
}

int Field::from_int(long long k) const
{
    k %= p_;
    if (k < 0) k += p_;
    return static_cast<int>(k);
}

long long Field::order(int a) const
{
    if (a == 0) throw ArithmeticError("order of zero");
    long long m = size_ - 1, e = log_[a];
    long long g = m, x = e;
    while (x) {
        long long t = g % x;
        g = x;
        x = t;
    }
    return m / g;
}

std::vector<int> Field::subfield(int d) const
{
    if (d <= 0 || n_ % d) throw DomainError("not a subfield degree");
    std::vector<int> out;
    for (int a = 0; a < size_; ++a)
        if (frob(a, d) == a) out.push_back(a);
    return out;
}

FieldTower::FieldTower(int p, int d, int nmax) : p_(p), d_(d), q_(ipow(p, d))
{
    for (int n = 1; n <= nmax; ++n) levels_.push_back(&Field::get(p, d * n));
}

int FieldTower::embed(int a, int from, int to) const
{
    if (to % from) throw DomainError("levels are not nested");
    const Field& lo = level(from);
    const Field& hi = level(to);
    // smallest root in the target of the defining polynomial of the source
    int root = -1;
    for (int c = 0; c < hi.size() && root < 0; ++c) {
        int val = 1;
        for (int k = lo.n() - 1; k >= 0; --k) val = hi.add(hi.mul(val, c), hi.from_int(lo.modulus()[k]));
        if (val == 0) root = c;
    }
    if (root < 0) throw ConfigError("embedding root not found");
    int res = 0, pw = 1;
    for (int k = 0; k < lo.n(); ++k) {
        int digit = a % p_;
        a /= p_;
        res = hi.add(res, hi.mul(hi.from_int(digit), pw));
        pw = hi.mul(pw, root);
    }
    return res;
}

int FieldTower::frobenius(int a, int n, int power) const
{
    return level(n).frob(a, d_ * power);
}

TruncatedSeries::TruncatedSeries(const Field& F, int M) : F_(&F), c_(M, 0) {}

TruncatedSeries::TruncatedSeries(const Field& F, std::vector<int> coeffs) : F_(&F), c_(std::move(coeffs))
{
    for (int c : c_)
        if (c < 0 || c >= F.size()) throw DomainError("coefficient outside field");
}

TruncatedSeries TruncatedSeries::constant(const Field& F, int M, int c)
{
    TruncatedSeries s(F, M);
    if (M > 0) s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Field& F, int M, int c, int k)
{
    TruncatedSeries s(F, M);
    if (k < M) s.c_[k] = c;
    return s;
}

int TruncatedSeries::valuation() const
{
    for (int k = 0; k < order(); ++k)
        if (c_[k]) return k;
    return order();
}

void TruncatedSeries::check(const TruncatedSeries& o) const
{
    if (F_ != o.F_ || c_.size() != o.c_.size()) throw DomainError("series over different rings");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    check(o);
    TruncatedSeries r(*F_, order());
    for (int k = 0; k < order(); ++k) r.c_[k] = F_->add(c_[k], o.c_[k]);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const
{
    check(o);
    TruncatedSeries r(*F_, order());
    for (int k = 0; k < order(); ++k) r.c_[k] = F_->sub(c_[k], o.c_[k]);
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r(*F_, order());
    for (int k = 0; k < order(); ++k) r.c_[k] = F_->neg(c_[k]);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const
{
    check(o);
    int M = order();
    TruncatedSeries r(*F_, M);
    for (int i = 0; i < M; ++i) {
        if (!c_[i]) continue;
        for (int j = 0; i + j < M; ++j) r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
    }
    return r;
}

TruncatedSeries TruncatedSeries::inv() const
{
    if (!is_unit()) throw ArithmeticError("inverse of a non-unit series");
    int M = order();
    TruncatedSeries r(*F_, M);
    int u = F_->inv(c_[0]);
    r.c_[0] = u;
    for (int k = 1; k < M; ++k) {
        int acc = 0;
        for (int j = 1; j <= k; ++j) acc = F_->add(acc, F_->mul(c_[j], r.c_[k - j]));
        r.c_[k] = F_->neg(F_->mul(acc, u));
    }
    return r;
}

TruncatedSeries TruncatedSeries::frobenius(int k) const
{
    TruncatedSeries r(*F_, order());
    for (int i = 0; i < order(); ++i) r.c_[i] = F_->frob(c_[i], k);
    return r;
}

std::string TruncatedSeries::encode() const
{
    std::string s = "[";
    for (size_t k = 0; k < c_.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(c_[k]);
    }
    return s + "]";
}

TruncatedSeries coeff_frobenius(const TruncatedSeries& f, int d, int power)
{
    return f.frobenius(d * power);
}

}  // namespace dlpar
