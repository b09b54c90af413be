#pragma once

#include <stdexcept>
#include <string>

namespace cspec {

/// Malformed caller input (bad parameters, constraint violations, parse failures).
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Request exceeds a documented size limit of the chosen algorithm.
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A documented precondition between modules was violated.
struct contract_error : std::logic_error {
    explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

/// Exact-arithmetic operation that cannot succeed (non-exact division, zero divisor).
struct algebra_error : std::runtime_error {
    explicit algebra_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cspec
