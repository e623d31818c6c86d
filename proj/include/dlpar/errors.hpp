#pragma once

#include <stdexcept>
#include <string>

namespace dlpar {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

struct MembershipError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// an enumeration or search ran past its budget; partial holds the count reached
struct ResourceError : std::runtime_error {
    ResourceError(const std::string& what, long long partial_count)
        : std::runtime_error(what), partial(partial_count) {}
    long long partial;
};

}  // namespace dlpar
