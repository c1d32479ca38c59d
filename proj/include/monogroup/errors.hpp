#pragma once

#include <stdexcept>
#include <string>

namespace mono {

// Bad user input (non-prime p, scalar A, malformed file, ...). CLI exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration would exceed the element cap. Resource error, CLI exit code 3.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in Q(zeta_m)") {}
};

}  // namespace mono
