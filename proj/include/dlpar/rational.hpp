#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

namespace dlpar {

using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;

inline long long floor_rat(const Rat& x)
{
    long long n = x.numerator(), d = x.denominator();
    long long q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline long long ceil_rat(const Rat& x) { return -floor_rat(-x); }

// fractional part in [0, 1)
inline Rat frac_rat(const Rat& x) { return x - Rat(floor_rat(x)); }

inline std::string rat_str(const Rat& x)
{
    if (x.denominator() == 1) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

// "a", "-a", "a/b"
Rat parse_rat(const std::string& s);

}  // namespace dlpar
