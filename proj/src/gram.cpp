#include "lipcert/gram.hpp"

#include "lipcert/error.hpp"

namespace lipcert {

Rational expand(const std::vector<IterationRecord>& records, const Rational& v, const SqrtConfig& cfg) {
  if (v.sign() < 0) throw DomainError("expand requires a nonnegative seed value");
  Rational acc = v;
  for (const auto& rec : records) {
    acc = sqrt_upper_bound(rec.scale * (acc + rec.err_bound), cfg).value;
  }
  return acc;
}

GramTrace gram_iteration_trace(const Matrix& m, std::size_t iterations, const GramConfig& cfg) {
  GramTrace trace;
  trace.records.reserve(iterations);
  Matrix current = m;
  for (std::size_t i = 0; i < iterations; ++i) {
    const Matrix gram = mtm(current);
    // ||M_i||_op <= sqrt(r * (||M_{i+1}||_op + ||E_{i+1}||_op)) by Weyl.
    Rational scale = is_zero_matrix(gram) ? Rational(1) : frobenius_norm_upper_bound(gram, cfg.sqrt);
    auto [truncated, error] = truncate_with_error(matrix_div(gram, scale), cfg.truncation_places);
    Rational err_bound = frobenius_norm_upper_bound(error, cfg.sqrt);
    current = std::move(truncated);
    trace.records.insert(trace.records.begin(), IterationRecord{std::move(scale), std::move(err_bound)});
  }
  trace.final_frobenius = frobenius_norm_upper_bound(current, cfg.sqrt);
  trace.bound = {expand(trace.records, trace.final_frobenius, cfg.sqrt), iterations};
  return trace;
}

OperatorNormBound gram_iteration(const Matrix& m, std::size_t iterations, const GramConfig& cfg) {
  return gram_iteration_trace(m, iterations, cfg).bound;
}

}  // namespace lipcert
