#pragma once

#include <stdexcept>
#include <string>

namespace twin {

// Invalid configuration or inconsistent artifacts. The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure: non-convergence, singular factorization, out-of-range state.
// The CLI maps this to exit code 3.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Evidence assigned zero posterior mass to every state. Signals an inconsistent
// observation table; never silently renormalized.
struct EvidenceError : NumericError {
  explicit EvidenceError(const std::string& msg) : NumericError(msg) {}
};

}  // namespace twin
