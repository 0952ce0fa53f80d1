#include "marmann/bounds.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace marmann;

TEST_CASE("GB at zero error is the complexity term alone") {
  const double L = 4 * std::log(100.0 * 3) + std::log(1 / 0.05);
  CHECK(gb(0.0, 3, 0.05, 100, 3) == doctest::Approx(2.0 / 3 * L / 97).epsilon(1e-14));
  CHECK_THROWS(gb(0.1, 100, 0.05, 100));
  CHECK_THROWS(gb(0.1, 3, 0.05, 100, 0));
}

TEST_CASE("phi and G") {
  CHECK(phi(2, 6, 0.5) == doctest::Approx((3 * std::log(6.0) + std::log(2.0)) / 6).epsilon(1e-15));
  CHECK(g_value(0.0, 0.3) == doctest::Approx(0.2));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  for (int r = 0; r < 2000; ++r) {
    const std::size_t m = 6 + static_cast<std::size_t>(u(rng) * 2000);
    const auto N = static_cast<std::size_t>(u(rng) * static_cast<double>(m - 1));
    const double eps = u(rng), delta = 0.249 * u(rng) + 1e-6;
    const double alpha = static_cast<double>(m) / static_cast<double>(m - N);
    CHECK(gb(eps, N, delta, m) == doctest::Approx(alpha * g_value(eps, phi(N, m, delta))).epsilon(1e-12));
  }
}

TEST_CASE("GB is increasing in error and in N below m/2") {
  for (std::size_t m : {10, 100, 1000})
    for (double delta : {0.01, 0.2}) {
      double prev = -1;
      for (int k = 0; k <= 50; ++k) {
        const double v = gb(k / 50.0, 2, delta, m);
        CHECK(v > prev);
        prev = v;
      }
      prev = -1;
      for (std::size_t N = 0; N < m / 2; ++N) {
        const double v = gb(0.1, N, delta, m);
        CHECK(v > prev);
        prev = v;
      }
    }
}

TEST_CASE("side-information bound is within a factor two") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int r = 0; r < 2000; ++r) {
    const std::size_t k = 2 + static_cast<std::size_t>(u(rng) * 9);
    const std::size_t m = k + static_cast<std::size_t>(u(rng) * 3000);
    const auto N = static_cast<std::size_t>(u(rng) * static_cast<double>(m - 1));
    const double eps = 0.5 * u(rng), delta = 0.2499 * u(rng) + 1e-9;
    CHECK(gb(eps, N, delta, m, k) <= 2 * gb(eps, N, 2 * delta, m, 1));
  }
}

TEST_CASE("gamma constants bound G") {
  for (double c : {0.1, 0.5, 1.0, 1.1, 2.0, 10.0})
    for (double phi_t : {1e-4, 0.01, 0.3})
      for (double s = 1.0; s < 20; s *= 1.7) {
        const double eps = c * phi_t * s;  // eps >= c phi
        CHECK(gamma_c(c) * eps >= g_value(eps, phi_t) * (1 - 1e-12));
        const double eps2 = phi_t / (c * s);  // phi >= c eps
        CHECK(gamma_tilde_c(c) * phi_t >= g_value(eps2, phi_t) * (1 - 1e-12));
      }
}
