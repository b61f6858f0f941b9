#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "softround/gradients.hpp"
#include "softround/sigmoid.hpp"

using namespace softround;

namespace {
const double kNan = std::numeric_limits<double>::quiet_NaN();
const double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("SharpnessK rejects non-positive and non-finite values") {
  CHECK_THROWS_AS(SharpnessK{0.0}, std::invalid_argument);
  CHECK_THROWS_AS(SharpnessK{-3.0}, std::invalid_argument);
  CHECK_THROWS_AS(SharpnessK{kNan}, std::invalid_argument);
  CHECK_THROWS_AS(SharpnessK{kInf}, std::invalid_argument);
  CHECK(SharpnessK{10.0}.value() == 10.0);
}

TEST_CASE("sigmoid basics") {
  CHECK(sigmoid(0.0) == 0.5);
  CHECK(std::fabs(sigmoid(50.0) - 1.0) <= 1e-20);
  for (const double z : {0.5, 3.0, 10.0}) {
    CHECK(std::fabs(sigmoid(-z) - (1.0 - sigmoid(z))) <= 1e-15);
  }
  CHECK_THROWS_AS(sigmoid(kNan), std::domain_error);
  CHECK_THROWS_AS(sigmoid(kInf), std::domain_error);
  CHECK_THROWS_AS(sigmoid(-kInf), std::domain_error);
}

TEST_CASE("sigmoid saturates without overflow at extreme arguments") {
  for (const double z : {700.0, 745.0, 800.0, 1e6, 3e8}) {
    const double hi = sigmoid(z);
    const double lo = sigmoid(-z);
    CHECK(hi == 1.0);
    CHECK(lo >= 0.0);
    CHECK(lo < 1e-300);
    CHECK(!std::isnan(hi));
    CHECK(!std::isnan(lo));
  }
  // Still strictly interior where the tail is representable.
  CHECK(sigmoid(30.0) < 1.0);
  CHECK(sigmoid(-30.0) > 0.0);
}

TEST_CASE("sigmoid is monotone and satisfies the reflection identity on a grid") {
  double previous = sigmoid(-30.0);
  for (int i = 1; i <= 600; ++i) {
    const double z = -30.0 + 0.1 * i;
    const double s = sigmoid(z);
    CHECK(s >= previous);
    CHECK(std::fabs(s + sigmoid(-z) - 1.0) <= 1e-15);
    previous = s;
  }
}

TEST_CASE("sigmoid_prime values and symmetry") {
  CHECK(sigmoid_prime(0.0) == 0.25);
  for (const double z : {1.0, 2.5}) {
    CHECK(std::fabs(sigmoid_prime(z) - sigmoid_prime(-z)) <= 1e-15);
  }
  // Matches the product form up to its own rounding: for z > 0 the factor
  // 1 - sigmoid(z) is quantized at ulp(1), an absolute error near 2e-16.
  for (double z = -30.0; z <= 30.0; z += 0.37) {
    const double product = sigmoid(z) * (1.0 - sigmoid(z));
    CHECK(std::fabs(sigmoid_prime(z) - product) <= 1e-13 * product + 2.3e-16);
    CHECK(sigmoid_prime(z) <= 0.25);
    CHECK(sigmoid_prime(z) > 0.0);
  }
  CHECK_THROWS_AS(sigmoid_prime(kNan), std::domain_error);
}

TEST_CASE("sigmoid_prime agrees with a central difference of sigmoid") {
  const double fd = finite_difference([](double z) { return sigmoid(z); }, 3.0, 1e-6);
  CHECK(std::fabs(sigmoid_prime(3.0) - fd) <= 1e-8);
}

TEST_CASE("rho peaks at its center with value k/4") {
  const SharpnessK k{10.0};
  CHECK(rho(3.0, 3.0, k) == 2.5);
  for (const double t : {0.3, 1.7}) {
    CHECK(std::fabs(rho(5.0 + t, 5.0, k) - rho(5.0 - t, 5.0, k)) <= 1e-15);
  }
  // Direct evaluation oracle; its 1 - sigmoid(5) factor is quantized at
  // ulp(1)/2, so the k-scaled comparison cannot be tighter than ~1e-15.
  const double direct = 10.0 * sigmoid(5.0) * (1.0 - sigmoid(5.0));
  CHECK(std::fabs(rho(0.5, 0.0, k) - direct) <= 3e-15);
  CHECK_THROWS_AS(rho(kNan, 0.0, k), std::domain_error);
}

TEST_CASE("rho is bounded by k/4 with equality only at the center") {
  for (const double kv : {1.0, 10.0, 50.0}) {
    const SharpnessK k{kv};
    for (int i = 0; i <= 6000; ++i) {
      const double x = -3.0 + i * 0.001;
      const double r = rho(x, 0.0, k);
      CHECK(r <= kv / 4.0);
      if (x != 0.0) CHECK(r < kv / 4.0);
    }
    CHECK(rho(0.0, 0.0, k) == kv / 4.0);
  }
}

TEST_CASE("rho_prime closed form, oddness and derivative oracle") {
  const SharpnessK k{10.0};
  CHECK(rho_prime(4.0, 4.0, k) == 0.0);
  CHECK(rho_prime(0.0, 0.0, SharpnessK{1.0}) == 0.0);
  CHECK(std::fabs(rho_prime(2.4, 2.0, k) + rho_prime(1.6, 2.0, k)) <= 1e-14);

  const double fd =
      finite_difference([&](double x) { return rho(x, 0.0, SharpnessK{10.0}); }, 0.2, 1e-6);
  CHECK(std::fabs(rho_prime(0.2, 0.0, k) - fd) <= 1e-6);
  CHECK_THROWS_AS(rho_prime(kInf, 0.0, k), std::domain_error);
}

TEST_CASE("rho_prime matches central differences of rho across the window") {
  for (const double kv : {1.0, 10.0, 50.0}) {
    const SharpnessK k{kv};
    const double center = 1.0;
    for (int i = 0; i <= 240; ++i) {
      const double x = center - 3.0 + i * 0.025;
      const double analytic = rho_prime(x, center, k);
      const double fd =
          finite_difference([&](double t) { return rho(t, center, k); }, x, 1e-6);
      const double scale = std::max(std::fabs(analytic), std::fabs(fd));
      // The absolute term covers difference-quotient cancellation noise,
      // ulp(k/4) / (2 * step), near the peak where rho' vanishes.
      CHECK(std::fabs(analytic - fd) <= std::max(1e-5 * scale, 1e-9 * kv));
    }
  }
}
