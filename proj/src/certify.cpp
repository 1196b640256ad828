#include "lipcert/certify.hpp"

#include <string>

#include "lipcert/error.hpp"
#include "lipcert/nn.hpp"

namespace lipcert {

CertificationResult certify(const Vector& v_out, const Rational& e, const LipschitzBounds& bounds) {
  if (v_out.size() != bounds.dim()) {
    throw DimensionError("output vector has length " + std::to_string(v_out.size()) +
                         " but the bounds table covers " + std::to_string(bounds.dim()) + " outputs");
  }
  if (e.sign() < 0) throw DomainError("perturbation bound must be nonnegative");

  CertificationResult result;
  result.argmax_index = argmax(v_out);
  const std::size_t x = result.argmax_index;
  // The table is symmetric; row x is contiguous.
  for (std::size_t i = 0; i < v_out.size(); ++i) {
    if (i == x) continue;
    if (bounds.at(x, i) * e >= v_out[x] - v_out[i]) {
      result.failing_index = i;
      return result;
    }
  }
  result.certified = true;
  return result;
}

}  // namespace lipcert
