#include "lipcert/nn.hpp"

#include <openssl/evp.h>

#include <array>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "lipcert/error.hpp"

namespace lipcert {

NeuralNet::NeuralNet(std::vector<Matrix> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw DimensionError("neural network needs at least one layer");
  for (std::size_t i = 0; i + 1 < layers_.size(); ++i) {
    if (layers_[i].rows() != layers_[i + 1].cols()) {
      throw DimensionError("layer " + std::to_string(i) + " has " + std::to_string(layers_[i].rows()) +
                           " rows but layer " + std::to_string(i + 1) + " has " +
                           std::to_string(layers_[i + 1].cols()) + " columns");
    }
  }
}

bool is_input(const Vector& v, const NeuralNet& net) { return v.size() == net.input_dim(); }

Vector apply_nn(const NeuralNet& net, const Vector& v) {
  if (!is_input(v, net)) {
    throw DimensionError("input has length " + std::to_string(v.size()) + ", network expects " +
                         std::to_string(net.input_dim()));
  }
  Vector current = v;
  for (std::size_t i = 0; i < net.depth(); ++i) {
    current = mv_product(net.layer(i), current);
    if (i + 1 < net.depth()) {
      std::vector<Rational> activated;
      activated.reserve(current.size());
      for (const auto& x : current) activated.push_back(relu(x));
      current = Vector(std::move(activated));
    }
  }
  return current;
}

std::size_t argmax(const Vector& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

bool sampled_robustness_check(const NeuralNet& net, const Vector& v, const Rational& e,
                              std::size_t samples, std::uint64_t seed) {
  if (e.sign() < 0) throw DomainError("perturbation bound must be nonnegative");
  const std::size_t expected = argmax(apply_nn(net, v));
  if (e.is_zero() || net.output_dim() == 1) return true;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<long> radius_steps(1, 1000);
  const Rational e_squared = square(e);

  for (std::size_t s = 0; s < samples; ++s) {
    // Integer direction on a 10^-6 grid of a Gaussian draw.
    std::vector<BigInt> direction(v.size());
    BigInt norm_sq = 0;
    while (norm_sq == 0) {
      for (auto& d : direction) {
        d = static_cast<long>(std::llround(gauss(rng) * 1e6));
        norm_sq += d * d;
      }
    }
    BigInt norm_ub = sqrt(norm_sq);
    if (norm_ub * norm_ub < norm_sq) norm_ub += 1;

    // Half of the draws sit on the sphere, the rest inside the ball.
    Rational radius = e;
    if (s % 2 == 1) radius *= Rational(BigInt(radius_steps(rng)), BigInt(1000));
    const Rational step = radius / Rational(norm_ub);

    std::vector<Rational> perturbed;
    perturbed.reserve(v.size());
    Rational delta_sq = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational delta = Rational(direction[i]) * step;
      delta_sq += square(delta);
      perturbed.push_back(v[i] + delta);
    }
    if (delta_sq > e_squared) throw DomainError("internal: sampled perturbation exceeds the bound");
    if (argmax(apply_nn(net, Vector(std::move(perturbed)))) != expected) return false;
  }
  return true;
}

std::string canonical_text(const NeuralNet& net) {
  std::string out;
  for (std::size_t l = 0; l < net.depth(); ++l) {
    if (l > 0) out += '\n';
    const Matrix& m = net.layer(l);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c > 0) out += ',';
        out += m(r, c).to_string();
      }
      out += '\n';
    }
  }
  return out;
}

std::string model_digest(const NeuralNet& net) {
  const std::string text = canonical_text(net);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  hex << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) hex << std::setw(2) << static_cast<int>(digest[i]);
  return hex.str();
}

}  // namespace lipcert
