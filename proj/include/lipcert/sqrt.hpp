#pragma once

#include <cstdint>

#include "lipcert/rational.hpp"

namespace lipcert {

struct SqrtConfig {
  /// Loop stops once successive iterates differ by at most this much.
  Rational err_tolerance = pow10(-11);
  std::uint64_t max_iterations = 2'000'000;
  /// Every iterate is rounded up onto this decimal grid to bound bit growth.
  unsigned iterate_precision_places = 40;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

struct SqrtResult {
  Rational value;
  bool converged = true;
  std::uint64_t iterations = 0;
};

/// Heron's method from above: returns r with r >= 0 and r*r >= x. The bound
/// holds even when the iteration budget runs out (converged = false, and a
/// warning is logged). Throws DomainError for negative x.
SqrtResult sqrt_upper_bound(const Rational& x, const SqrtConfig& cfg = {});

}  // namespace lipcert
