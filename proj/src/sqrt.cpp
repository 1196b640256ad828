#include "lipcert/sqrt.hpp"

#include <iostream>

#include "lipcert/error.hpp"

namespace lipcert {

void SqrtConfig::validate() const {
  if (err_tolerance.sign() <= 0) throw DomainError("sqrt tolerance must be positive");
  if (max_iterations < 1) throw DomainError("sqrt iteration budget must be at least 1");
  if (iterate_precision_places < 20) throw DomainError("sqrt iterate precision must be at least 20 places");
}

SqrtResult sqrt_upper_bound(const Rational& x, const SqrtConfig& cfg) {
  if (x.sign() < 0) throw DomainError("sqrt_upper_bound of negative value " + x.to_string());
  cfg.validate();
  if (x.is_zero()) return {Rational(0), true, 0};

  // max(x, 1) >= sqrt(x), and each Heron step from above stays above (AM-GM).
  Rational r = x < Rational(1) ? Rational(1) : x;
  for (std::uint64_t i = 1; i <= cfg.max_iterations; ++i) {
    const Rational previous = r;
    r = round_up((r + x / r) / Rational(2), cfg.iterate_precision_places);
    if (previous - r <= cfg.err_tolerance) return {std::move(r), true, i};
  }
  std::clog << "warning: sqrt upper bound terminated early after " << cfg.max_iterations
            << " iterations\n";
  return {std::move(r), false, cfg.max_iterations};
}

}  // namespace lipcert
