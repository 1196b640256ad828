#pragma once

#include <cstddef>
#include <vector>

#include "lipcert/linalg.hpp"
#include "lipcert/rational.hpp"
#include "lipcert/sqrt.hpp"

namespace lipcert {

struct GramConfig {
  SqrtConfig sqrt;
  /// Decimal places kept after each normalized Gram step.
  unsigned truncation_places = 16;
};

/// One normalization/truncation step: the Gram matrix was divided by
/// `scale` and the dropped truncation error has Frobenius norm <= err_bound.
struct IterationRecord {
  Rational scale;
  Rational err_bound;
};

struct OperatorNormBound {
  Rational value;
  std::size_t iterations = 0;
};

struct GramTrace {
  /// Most recent iteration first.
  std::vector<IterationRecord> records;
  /// Frobenius upper bound of the last iterate, before expansion.
  Rational final_frobenius;
  OperatorNormBound bound;
};

/// Unwinds the records head-first: v <- sqrt_upper_bound(scale * (v + err)).
/// Throws DomainError for negative v.
Rational expand(const std::vector<IterationRecord>& records, const Rational& v,
                const SqrtConfig& cfg = {});

GramTrace gram_iteration_trace(const Matrix& m, std::size_t iterations, const GramConfig& cfg = {});

/// Sound upper bound on the l2 operator norm of m after `iterations` Gram
/// steps. Zero iterations yields the Frobenius bound.
OperatorNormBound gram_iteration(const Matrix& m, std::size_t iterations, const GramConfig& cfg = {});

}  // namespace lipcert
