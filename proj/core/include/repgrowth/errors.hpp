#pragma once

#include <stdexcept>
#include <string>

namespace repgrowth {

// Root system id outside the canonical ranges (includes alias hints such as
// "use A3 for D3" where a coincidence of systems exists).
class InvalidIdError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested series or product does not converge (zeta at s <= 1, or a
// zeta-product factor with exponent v*s <= 1).
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computation would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search found no regular torus element of the requested order.
class NoRegularElementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace repgrowth
