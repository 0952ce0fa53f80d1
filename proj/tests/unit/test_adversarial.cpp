#include "fixtures.hpp"

#include "marmann/adversarial.hpp"
#include "marmann/nn_rule.hpp"

#include <doctest.h>

using namespace marmann;

TEST_CASE("parameter checks") {
  AdversarialParams p{3, 0.5, 0.2, {1, -1}, std::nullopt};
  CHECK_NOTHROW(p.validate());
  p.eta = 0.01;  // p (1/2 - b/2) = 0.05
  CHECK_THROWS(p.validate());
  p.eta = 0.05;
  CHECK_NOTHROW(p.validate());
  CHECK(p.bayes_error() == doctest::Approx(0.05));
  CHECK_THROWS(AdversarialParams{3, 0.5, 0.2, {1}, std::nullopt}.validate());
  CHECK_THROWS(AdversarialParams{3, 1.5, 0.2, {1, 1}, std::nullopt}.validate());
}

TEST_CASE("adversarial sampling") {
  Rng rng(1);
  const AdversarialParams det{4, 1.0, 0.5, {1, -1, 1}, std::nullopt};
  const auto s = sample_adversarial(det, 5000, rng);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.x[i] == 3) CHECK(s.y[i] == 1);
    else CHECK(s.y[i] == det.sigma[s.x[i]]);
  }

  const AdversarialParams rare{4, 0.3, 1e-6, {1, 1, 1}, std::nullopt};
  const auto r = sample_adversarial(rare, 10000, rng);
  CHECK(std::count(r.x.begin(), r.x.end(), std::size_t{3}) >= 9995);

  const AdversarialParams mid{3, 0.4, 0.6, {1, -1}, std::nullopt};
  const std::size_t n = 100000;
  const auto m = sample_adversarial(mid, n, rng);
  std::vector<double> cnt(3, 0), plus(3, 0);
  for (std::size_t i = 0; i < n; ++i) {
    cnt[m.x[i]] += 1;
    plus[m.x[i]] += m.y[i] > 0;
  }
  CHECK(std::abs(cnt[2] / n - 0.4) <= fixtures::binomial_slack(0.4, n, 4));
  for (std::size_t j = 0; j < 2; ++j) {
    const double expect = 0.5 + 0.4 * mid.sigma[j] / 2;
    CHECK(std::abs(plus[j] / cnt[j] - expect) <= fixtures::binomial_slack(expect, static_cast<std::size_t>(cnt[j]), 4));
  }
}

TEST_CASE("bayes values") {
  for (double b : {0.0, 0.3, 0.77, 1.0}) {
    CHECK(bayes_fn(0, b) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(bayes_fn(1, b) == doctest::Approx((1 - b) / 2).epsilon(1e-14));
    for (std::size_t k = 0; k <= 12; ++k) CHECK(std::abs(bayes_fn(k, b) - fixtures::brute_bayes(k, b)) <= 1e-12);
  }
  for (std::size_t k = 1; k < 40; ++k) CHECK(std::abs(bayes_fn(k, 1.0)) <= 1e-15);
  CHECK_THROWS(bayes_fn(10001, 0.5));
  CHECK_NOTHROW(bayes_fn(10000, 0.01));
}

TEST_CASE("bayes is non-increasing and its interpolation is convex") {
  for (double b : {0.05, 0.2, 0.5, 0.9}) {
    for (std::size_t k = 0; k < 200; ++k) CHECK(bayes_fn(k + 1, b) <= bayes_fn(k, b) * (1 + 1e-12));
    for (double b2 : {b + 0.01, b + 0.05})
      for (std::size_t k = 0; k < 50; ++k) CHECK(bayes_fn(k, b2) <= bayes_fn(k, b) * (1 + 1e-12));
    double prev_slope = -1e300;
    for (double k = 0; k < 100; k += 0.5) {
      const double slope = bayes_check_fn(k + 0.5, b) - bayes_check_fn(k, b);
      CHECK(slope >= prev_slope - 1e-13);
      prev_slope = slope;
    }
    for (std::size_t k = 0; k < 60; ++k) CHECK(bayes_check_fn(static_cast<double>(k), b) <= bayes_fn(k, b) + 1e-14);
    CHECK(bayes_check_fn(0.4, b) == doctest::Approx(0.5 * (1 - 0.4 * b)));
  }
}

TEST_CASE("minority counts") {
  CHECK(minority_count_nu(DiscreteSample{{0, 0, 1}, {1, 1, -1}}) == 0.0);
  CHECK(minority_count_nu(DiscreteSample{{0, 0, 0}, {1, 1, -1}}) == doctest::Approx(1.0 / 3));

  Rng rng(4);
  for (double beta : {0.0, 0.1, 0.3}) {
    UniformNoisyParams params{6, beta, {}};
    const auto s = sample_uniform_noisy(params, 90, rng);
    const LabeledPool pool = embed_on_line(s);
    CHECK(minority_count_nu(s) == doctest::Approx(nu_exact_binary(pool, 1.0)).epsilon(1e-15));
  }
}

TEST_CASE("expected minority count bounds") {
  Rng rng(5);
  const auto zero = expected_minority_bounds(UniformNoisyParams{5, 0.0, {}}, 100, 200, rng);
  CHECK(zero.mean == 0.0);
  const auto half = expected_minority_bounds(UniformNoisyParams{1, 0.499999, {}}, 400, 2000, rng);
  CHECK(half.exact == doctest::Approx(399.0 / 2).epsilon(1e-4));
  CHECK(std::abs(half.mean - half.exact) <= 0.03 * half.exact);
  for (double beta : {0.1, 0.3})
    for (std::size_t N : {2, 10})
      for (std::size_t m : {20, 100}) {
        const auto e = expected_minority_bounds(UniformNoisyParams{N, beta, {}}, m, 500, rng);
        CHECK(e.lower <= e.exact);
        CHECK(e.exact <= e.upper);
        CHECK(e.mean >= e.lower * 0.95);
        CHECK(e.mean <= e.upper * 1.05);
      }
  CHECK_THROWS(expected_minority_bounds(UniformNoisyParams{2, 0.1, {}}, 10, 50, rng));
}
