#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lipcert/linalg.hpp"
#include "lipcert/rational.hpp"

namespace lipcert {

/// Dense ReLU network without biases. Layer i maps cols(i) inputs to
/// rows(i) outputs; ReLU follows every layer except the last.
class NeuralNet {
 public:
  /// Throws DimensionError for an empty layer list or a broken chain
  /// (rows of layer i must equal cols of layer i+1).
  explicit NeuralNet(std::vector<Matrix> layers);

  std::size_t depth() const noexcept { return layers_.size(); }
  const Matrix& layer(std::size_t i) const { return layers_.at(i); }
  const std::vector<Matrix>& layers() const noexcept { return layers_; }
  const Matrix& last_layer() const { return layers_.back(); }
  std::size_t input_dim() const { return layers_.front().cols(); }
  std::size_t output_dim() const { return layers_.back().rows(); }

  friend bool operator==(const NeuralNet&, const NeuralNet&) = default;

 private:
  std::vector<Matrix> layers_;
};

bool is_input(const Vector& v, const NeuralNet& net);

inline Rational relu(const Rational& x) { return x.sign() >= 0 ? x : Rational(0); }

/// Exact forward pass. Throws DimensionError unless is_input(v, net).
Vector apply_nn(const NeuralNet& net, const Vector& v);

/// Index of the maximum; ties go to the lowest index.
std::size_t argmax(const Vector& v);

/// Refutation oracle for l2 robustness: draws `samples` perturbations with
/// ||delta||^2 <= e^2 (checked exactly) and returns false iff one of them
/// changes the argmax. `true` is evidence, not proof.
bool sampled_robustness_check(const NeuralNet& net, const Vector& v, const Rational& e,
                              std::size_t samples, std::uint64_t seed);

/// Weights as exact "num/den" entries, one row per line, layers separated
/// by a blank line.
std::string canonical_text(const NeuralNet& net);

/// Hex SHA-256 of canonical_text(net).
std::string model_digest(const NeuralNet& net);

}  // namespace lipcert
