#pragma once

#include <cstddef>
#include <optional>

#include "lipcert/linalg.hpp"
#include "lipcert/lipschitz.hpp"
#include "lipcert/rational.hpp"

namespace lipcert {

struct CertificationResult {
  bool certified = false;
  std::size_t argmax_index = 0;
  /// First i != argmax with L[i][argmax] * e >= v[argmax] - v[i].
  std::optional<std::size_t> failing_index;
};

/// Accepts v_out iff every other logit trails the maximum by strictly more
/// than its margin bound times e. One lookup, multiply, subtract and
/// compare per index. Throws DimensionError when |v_out| != bounds.dim()
/// and DomainError when e < 0.
CertificationResult certify(const Vector& v_out, const Rational& e, const LipschitzBounds& bounds);

}  // namespace lipcert
