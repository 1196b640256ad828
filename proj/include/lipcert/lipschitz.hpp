#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lipcert/gram.hpp"
#include "lipcert/nn.hpp"
#include "lipcert/rational.hpp"

namespace lipcert {

/// Margin Lipschitz bound table: at(i, k) bounds how fast
/// N(v)[k] - N(v)[i] can change per unit l2 change of v. Symmetric, zero
/// diagonal.
class LipschitzBounds {
 public:
  /// Zero table of side `dim`; throws DimensionError for dim == 0.
  explicit LipschitzBounds(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Rational& at(std::size_t i, std::size_t k) const { return table_[i * dim_ + k]; }
  /// Writes both (i, k) and (k, i). Throws DomainError for i == k or a
  /// negative bound, DimensionError for an index out of range.
  void set_pair(std::size_t i, std::size_t k, const Rational& bound);

  std::size_t gram_iterations = 0;
  SqrtConfig sqrt_config;
  std::string model_digest;

  friend bool operator==(const LipschitzBounds& a, const LipschitzBounds& b);

 private:
  std::size_t dim_;
  std::vector<Rational> table_;
};

/// Bound for output pair (i, k): the product of layer_norm_bounds[0..n-2]
/// times an l2 upper bound of last_layer[k] - last_layer[i]. Every
/// layer_norm_bounds[j] must upper-bound the operator norm of layer j.
Rational gen_lipschitz_bound(const NeuralNet& net, std::size_t i, std::size_t k,
                             const std::vector<Rational>& layer_norm_bounds, const SqrtConfig& cfg = {});

/// Operator-norm bounds for every layer: Gram iteration on all but the
/// last, Frobenius bound on the last (unused by the margin product).
std::vector<Rational> layer_norm_bounds(const NeuralNet& net, std::size_t gram_iterations,
                                        const GramConfig& cfg = {});

LipschitzBounds gen_all_bounds(const NeuralNet& net, std::size_t gram_iterations, const GramConfig& cfg = {});

}  // namespace lipcert
