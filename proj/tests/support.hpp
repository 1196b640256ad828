#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "lipcert/linalg.hpp"
#include "lipcert/nn.hpp"
#include "lipcert/rational.hpp"

namespace lipcert::test {

/// Uniform k / 10^4 with k in [-10^4, 10^4].
inline Rational random_weight(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-10000, 10000);
  return Rational(BigInt(dist(rng)), BigInt(10000));
}

inline Rational random_rational(std::mt19937_64& rng, long max_num = 1'000'000, long max_den = 1'000'000) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::vector<Rational> data;
  data.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) data.push_back(random_weight(rng));
  return Matrix(rows, cols, std::move(data));
}

inline Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> data(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      data[i * n + j] = random_weight(rng);
      data[j * n + i] = data[i * n + j];
    }
  }
  return Matrix(n, n, std::move(data));
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> data;
  for (std::size_t i = 0; i < n; ++i) data.push_back(random_weight(rng));
  return Vector(std::move(data));
}

inline std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random net: depth in [1, max_depth], every width in [1, max_width]
/// (the output width is at least 2 so margins exist).
inline NeuralNet random_net(std::mt19937_64& rng, std::size_t max_depth, std::size_t max_width) {
  const std::size_t depth = random_size(rng, 1, max_depth);
  std::vector<std::size_t> widths;
  for (std::size_t i = 0; i < depth; ++i) widths.push_back(random_size(rng, 1, max_width));
  widths.push_back(random_size(rng, 2, max_width));
  std::vector<Matrix> layers;
  for (std::size_t i = 0; i < depth; ++i) layers.push_back(random_matrix(rng, widths[i + 1], widths[i]));
  return NeuralNet(std::move(layers));
}

/// One hidden unit with weight `first_weight`, then outputs [h, -h].
inline NeuralNet two_layer_toy(const Rational& first_weight) {
  return NeuralNet({Matrix{{first_weight}}, Matrix{{Rational(1)}, {Rational(-1)}}});
}

}  // namespace lipcert::test
