#include "lipcert/lipschitz.hpp"

#include "lipcert/error.hpp"

namespace lipcert {

LipschitzBounds::LipschitzBounds(std::size_t dim) : dim_(dim), table_(dim * dim) {
  if (dim == 0) throw DimensionError("bounds table needs at least one output");
}

void LipschitzBounds::set_pair(std::size_t i, std::size_t k, const Rational& bound) {
  if (i >= dim_ || k >= dim_) throw DimensionError("bounds index out of range");
  if (i == k) throw DomainError("bounds are only defined for distinct outputs");
  if (bound.sign() < 0) throw DomainError("margin Lipschitz bound must be nonnegative");
  table_[i * dim_ + k] = bound;
  table_[k * dim_ + i] = bound;
}

bool operator==(const LipschitzBounds& a, const LipschitzBounds& b) {
  return a.dim_ == b.dim_ && a.table_ == b.table_ && a.gram_iterations == b.gram_iterations &&
         a.sqrt_config.err_tolerance == b.sqrt_config.err_tolerance &&
         a.sqrt_config.max_iterations == b.sqrt_config.max_iterations &&
         a.model_digest == b.model_digest;
}

Rational gen_lipschitz_bound(const NeuralNet& net, std::size_t i, std::size_t k,
                             const std::vector<Rational>& layer_norm_bounds, const SqrtConfig& cfg) {
  const Matrix& last = net.last_layer();
  if (layer_norm_bounds.size() != net.depth()) {
    throw DimensionError("need one operator-norm bound per layer");
  }
  if (i >= last.rows() || k >= last.rows()) throw DimensionError("output index out of range");
  if (i == k) throw DomainError("margin bound needs two distinct outputs");

  Rational bound = l2_upper_bound(minus(last.row_vector(k), last.row_vector(i)), cfg);
  for (std::size_t layer = net.depth() - 1; layer > 0; --layer) {
    const Rational& s = layer_norm_bounds[layer - 1];
    if (s.sign() < 0) throw DomainError("operator-norm bound must be nonnegative");
    bound *= s;
  }
  return bound;
}

std::vector<Rational> layer_norm_bounds(const NeuralNet& net, std::size_t gram_iterations, const GramConfig& cfg) {
  std::vector<Rational> bounds;
  bounds.reserve(net.depth());
  for (std::size_t j = 0; j + 1 < net.depth(); ++j) {
    bounds.push_back(gram_iteration(net.layer(j), gram_iterations, cfg).value);
  }
  bounds.push_back(frobenius_norm_upper_bound(net.last_layer(), cfg.sqrt));
  return bounds;
}

LipschitzBounds gen_all_bounds(const NeuralNet& net, std::size_t gram_iterations, const GramConfig& cfg) {
  const auto norms = layer_norm_bounds(net, gram_iterations, cfg);
  LipschitzBounds bounds(net.output_dim());
  for (std::size_t i = 0; i < net.output_dim(); ++i) {
    for (std::size_t k = i + 1; k < net.output_dim(); ++k) {
      bounds.set_pair(i, k, gen_lipschitz_bound(net, i, k, norms, cfg.sqrt));
    }
  }
  bounds.gram_iterations = gram_iterations;
  bounds.sqrt_config = cfg.sqrt;
  bounds.model_digest = model_digest(net);
  return bounds;
}

}  // namespace lipcert
