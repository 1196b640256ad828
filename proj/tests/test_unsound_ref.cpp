#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "lipcert/rational.hpp"
#include "lipcert/testing/unsound_ref.hpp"

using namespace lipcert;
using namespace lipcert::unsound;

namespace {

Rational pow2(long e) {
  const BigInt one = 1;
  return e >= 0 ? Rational(BigInt(one << static_cast<mp_bitcnt_t>(e)))
                : Rational(one, BigInt(one << static_cast<mp_bitcnt_t>(-e)));
}

Rational exact(float f) {
  int e = 0;
  const float m = std::frexp(f, &e);
  const long mant = std::lround(std::ldexp(m, 24));
  return Rational(BigInt(mant)) * pow2(e - 24);
}

// floor(log2(x)) for x > 0.
long floor_log2(const Rational& x) {
  long e = static_cast<long>(mpz_sizeinbase(x.numerator().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.denominator().get_mpz_t(), 2));
  while (pow2(e) > x) --e;
  while (pow2(e + 1) <= x) ++e;
  return e;
}

// Nearest-even binary32 rounding of an exact value, including subnormals
// and overflow to infinity.
float round_to_binary32(const Rational& x) {
  if (x.is_zero()) return 0.0F;
  const Rational mag = abs(x);
  const float sign = x.sign() < 0 ? -1.0F : 1.0F;
  const long e = std::max(floor_log2(mag), -126L);
  const Rational scaled = mag / pow2(e - 23);
  const BigInt lo = scaled.numerator() / scaled.denominator();
  const Rational frac = scaled - Rational(lo);
  BigInt n = lo;
  if (frac > Rational(BigInt(1), BigInt(2)) || (frac == Rational(BigInt(1), BigInt(2)) && lo % 2 != 0)) n += 1;
  const long exponent = e - 23 + static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  if (exponent > 128) return sign * std::numeric_limits<float>::infinity();
  return sign * std::ldexp(static_cast<float>(n.get_si()), static_cast<int>(e - 23));
}

float random_finite_float(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> bits;
  for (;;) {
    const float f = std::bit_cast<float>(bits(rng));
    if (std::isfinite(f)) return f;
  }
}

float random_moderate_float(std::mt19937_64& rng) {
  std::uniform_real_distribution<float> dist(-4.0F, 4.0F);
  return dist(rng);
}

bool same_float(float a, float b) { return a == b || (std::isnan(a) && std::isnan(b)); }

}  // namespace

TEST_CASE("oracle self-check on known roundings") {
  CHECK(round_to_binary32(Rational(BigInt(1), BigInt(3))) == 1.0F / 3.0F);
  CHECK(round_to_binary32(pow2(-149)) == std::numeric_limits<float>::denorm_min());
  CHECK(round_to_binary32(pow2(-150)) == 0.0F);
  CHECK(round_to_binary32(pow2(128)) == std::numeric_limits<float>::infinity());
  CHECK(round_to_binary32(exact(std::numeric_limits<float>::max())) == std::numeric_limits<float>::max());
}

TEST_CASE("single-precision arithmetic matches exact rounding") {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 100000; ++t) {
    const bool wide = t % 2 == 0;
    const float a = wide ? random_finite_float(rng) : random_moderate_float(rng);
    const float b = wide ? random_finite_float(rng) : random_moderate_float(rng);
    const Rational x = exact(a), y = exact(b);
    REQUIRE(same_float(f32::add(a, b), round_to_binary32(x + y)));
    REQUIRE(same_float(f32::sub(a, b), round_to_binary32(x - y)));
    REQUIRE(same_float(f32::mul(a, b), round_to_binary32(x * y)));
    if (b != 0.0F) REQUIRE(same_float(f32::div(a, b), round_to_binary32(x / y)));
  }
}

TEST_CASE("single-precision sqrt is correctly rounded") {
  std::mt19937_64 rng(109);
  for (int t = 0; t < 20000; ++t) {
    const float a = std::fabs(t % 2 == 0 ? random_finite_float(rng) : random_moderate_float(rng));
    const float r = f32::sqrt(a);
    if (a == 0.0F) {
      REQUIRE(r == 0.0F);
      continue;
    }
    const Rational lo = (exact(r) + exact(std::nextafter(r, 0.0F))) / Rational(2);
    const Rational hi = (exact(r) + exact(std::nextafter(r, std::numeric_limits<float>::infinity()))) / Rational(2);
    REQUIRE(square(lo) <= exact(a));
    REQUIRE(exact(a) <= square(hi));
  }
}

TEST_CASE("tiny weights collapse the margin bound to zero") {
  const float tiny = std::numeric_limits<float>::min();
  CHECK(ref_tiny_weight_lipschitz(FloatMatrix(2, 1, {tiny, -tiny})) == 0.0F);
  CHECK(ref_tiny_weight_lipschitz(FloatMatrix(2, 1, {1.0F, -1.0F})) == 2.0F);
}

TEST_CASE("guarded power method underestimates small layers") {
  const float w = 1e-5F;
  const float est = ref_power_method_norm(FloatMatrix(1, 1, {w}), 100);
  CHECK(est < w);
  MESSAGE("reference estimate for w = 1e-5: " << est);
  const std::vector<FloatMatrix> layers{FloatMatrix(1, 1, {w}), FloatMatrix(2, 1, {1.0F, -1.0F})};
  CHECK(ref_margin_lipschitz(layers, 0, 1) < 2 * w);
  // Large weights are estimated well.
  CHECK(std::fabs(ref_power_method_norm(FloatMatrix(1, 1, {3.0F}), 100) - 3.0F) < 1e-5F);
}

TEST_CASE("bottom logit ignores ties with the winner") {
  const FloatTable table{{0.0F, 1.8F}, {1.8F, 0.0F}};
  const std::vector<float> tie{0.0F, 0.0F};
  for (float eps : {0.0F, 0.1F, 1.58F}) {
    CHECK(ref_bot_logit(tie, eps, table) == -std::numeric_limits<float>::infinity());
    CHECK(ref_certify(tie, eps, table));
  }
  const std::vector<float> gap{1.0F, 0.0F};
  CHECK(ref_bot_logit(gap, 0.5F, table) == 0.9F);
  CHECK(ref_certify(gap, 0.5F, table));
  CHECK_FALSE(ref_certify(gap, 1.0F, table));
}
