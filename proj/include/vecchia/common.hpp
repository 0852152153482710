/* Shared error types and version tag. */
#pragma once

#include <stdexcept>
#include <string>

namespace vecchia {

inline constexpr const char* kVersion = "0.1.0";

/* Invalid argument values: bad parameters, malformed ranges. */
class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/* Numerical breakdown: failed factorizations, ill-conditioned systems.
 * Deliberately not recovered from — no silent jitter anywhere. */
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Unusable run configuration (CLI/config-file level). */
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vecchia
