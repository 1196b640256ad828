#include <doctest.h>

#include <random>

#include "lipcert/error.hpp"
#include "lipcert/gram.hpp"
#include "lipcert/testing/oracle.hpp"
#include "support.hpp"

using namespace lipcert;

namespace {
Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("expand examples") {
  CHECK(expand({}, Rational(7)) == Rational(7));

  const Rational two = expand({{Rational(1), Rational(0)}}, Rational(4));
  CHECK(two >= Rational(2));
  CHECK(two <= Rational(2) + pow10(-10));

  CHECK(square(expand({{Rational(2), Rational(0)}}, Rational(2))) >= Rational(4));
  CHECK_THROWS_AS(expand({}, Rational(-1)), DomainError);
}

TEST_CASE("expand folds head first") {
  // sqrt(3 * sqrt(2 * 8)) = sqrt(12) when (3, 0) is applied after (2, 0).
  const std::vector<IterationRecord> records{{Rational(2), Rational(0)}, {Rational(3), Rational(0)}};
  const Rational r = expand(records, Rational(8));
  CHECK(square(r) >= Rational(12));
  CHECK(square(r) <= Rational(12) + pow10(-9));
}

TEST_CASE("tiny 1x1 layer is bounded from above") {
  const Rational w = parse_decimal("1e-5");
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto bound = gram_iteration(Matrix{{w}}, n);
    CHECK(bound.iterations == n);
    CHECK(bound.value >= w);
    MESSAGE("n=" << n << " bound/w - 1 = " << ((bound.value / w) - Rational(1)).to_double());
  }
}

TEST_CASE("identity and permutation") {
  // Every normalized Gram matrix of I is I/sqrt(2), so n steps give sqrt(2)^(1/2^n).
  const auto id = gram_iteration(Matrix::identity(2), 3);
  CHECK(id.value >= Rational(1));
  Rational pow16 = id.value;
  for (int k = 0; k < 4; ++k) pow16 = square(pow16);
  CHECK(pow16 >= Rational(2));
  CHECK(pow16 <= Rational(2) + pow10(-8));
  MESSAGE("identity n=3 bound - 1 = " << (id.value - Rational(1)).to_double());

  const auto id_deep = gram_iteration(Matrix::identity(2), 22);
  CHECK(id_deep.value >= Rational(1));
  CHECK(id_deep.value <= Rational(1) + pow10(-6));
  MESSAGE("identity n=22 bound - 1 = " << (id_deep.value - Rational(1)).to_double());

  CHECK(gram_iteration(Matrix{{0, 1}, {1, 0}}, 3).value >= Rational(1));
}

TEST_CASE("zero iterations is the Frobenius bound") {
  const Matrix m{{1, 2}, {3, 4}};
  CHECK(gram_iteration(m, 0).value == frobenius_norm_upper_bound(m));
}

TEST_CASE("zero matrix: unit scales and a zero bound") {
  const auto trace = gram_iteration_trace(Matrix::zero(3, 2), 4);
  CHECK(trace.records.size() == 4);
  for (const auto& rec : trace.records) {
    CHECK(rec.scale == Rational(1));
    CHECK(rec.err_bound == Rational(0));
  }
  CHECK(trace.bound.value == Rational(0));
}

TEST_CASE("a Gram matrix that vanishes after truncation keeps positive scales") {
  // (1e-20)^2 / its Frobenius bound truncates to zero at 16 places.
  const auto trace = gram_iteration_trace(Matrix{{parse_decimal("1e-20")}}, 3);
  CHECK(trace.records.size() == 3);
  for (const auto& rec : trace.records) CHECK(rec.scale > Rational(0));
  CHECK(trace.bound.value >= parse_decimal("1e-20"));
}

TEST_CASE("record list length and positivity") {
  std::mt19937_64 rng(31);
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto trace = gram_iteration_trace(test::random_matrix(rng, 3, 4), n);
    REQUIRE(trace.records.size() == n);
    for (const auto& rec : trace.records) {
      REQUIRE(rec.scale > Rational(0));
      REQUIRE(rec.err_bound >= Rational(0));
    }
  }
}

TEST_CASE("1x1 layers are tight") {
  std::mt19937_64 rng(37);
  const SqrtConfig cfg;
  for (int t = 0; t < 40; ++t) {
    const Rational a = test::random_weight(rng);
    const std::size_t n = test::random_size(rng, 1, 6);
    const Rational bound = gram_iteration(Matrix{{a}}, n).value;
    REQUIRE(bound >= abs(a));
    REQUIRE(bound <= abs(a) + Rational(10) * cfg.err_tolerance);
  }
}

TEST_CASE("gram bound dominates sampled lower bounds") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const Matrix m = test::random_matrix(rng, test::random_size(rng, 1, 8), test::random_size(rng, 1, 8));
    const std::size_t n = static_cast<std::size_t>(t % 9);
    const Rational bound_sq = square(gram_iteration(m, n).value);
    const auto lower = oracle::sampled_opnorm_lower_bound(m, 1000, 1000 + t);
    REQUIRE(lower.squared <= bound_sq);
  }
}

TEST_CASE("gram bound dominates the exact power method") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const Matrix m = test::random_matrix(rng, test::random_size(rng, 1, 8), test::random_size(rng, 1, 8));
    const auto pm = oracle::correct_power_method(m, 500, 7 + t);
    for (std::size_t n : {1U, 4U, 8U}) REQUIRE(pm.squared <= square(gram_iteration(m, n).value));
  }
}

TEST_CASE("more iterations stay sound") {
  std::mt19937_64 rng(47);
  const Matrix m = test::random_matrix(rng, 6, 5);
  const auto pm = oracle::correct_power_method(m, 500, 3);
  for (std::size_t n = 0; n <= 10; ++n) {
    const Rational bound = gram_iteration(m, n).value;
    CHECK(pm.squared <= square(bound));
    MESSAGE("n=" << n << " bound/power-method = " << (bound / pm.value).to_double());
  }
}

TEST_CASE("truncation precision is configurable") {
  GramConfig cfg;
  cfg.truncation_places = 4;
  const Matrix m{{q(1, 3), q(2, 7)}, {q(-5, 11), q(1, 2)}};
  const auto pm = oracle::correct_power_method(m, 200, 1);
  CHECK(pm.squared <= square(gram_iteration(m, 6, cfg).value));
}
