#include "dlpar/rational.hpp"

#include "dlpar/errors.hpp"

namespace dlpar {

Rat parse_rat(const std::string& s)
{
    auto parse_int = [&](const std::string& t) {
        if (t.empty()) throw ConfigError("bad rational: '" + s + "'");
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(t, &pos);
        } catch (const std::exception&) {
            throw ConfigError("bad rational: '" + s + "'");
        }
        if (pos != t.size()) throw ConfigError("bad rational: '" + s + "'");
        return v;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    long long num = parse_int(s.substr(0, slash));
    long long den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ConfigError("zero denominator: '" + s + "'");
    return Rat(num, den);
}

}  // namespace dlpar
