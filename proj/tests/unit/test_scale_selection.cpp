#include "fixtures.hpp"

#include "marmann/marmann.hpp"
#include "marmann/matching.hpp"
#include "marmann/nn_rule.hpp"
#include "marmann/scale_selection.hpp"

#include <doctest.h>

#include <cmath>

using namespace marmann;

namespace {

std::size_t log2_floor(std::size_t n) { return static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(n)))); }

ScaleEstimator constant_ratio(double ratio) {
  return [ratio](double, double theta) { return EstimateOutcome{ratio * theta, 4, 0}; };
}

}  // namespace

TEST_CASE("single candidate scale inside the acceptance band stops the search") {
  std::mt19937_64 gen(1);
  auto pool = fixtures::random_binary_pool(60, 2, gen);
  MarmannState state(pool, 0.1, 1, ScaleGrid{1});
  REQUIRE(state.scales().size() == 1);
  const auto sel = select_scale(state, constant_ratio(1.05));
  CHECK(sel.trace.outcome == SearchExit::Break);
  CHECK(sel.t_hat == state.scales()[0]);
  CHECK(sel.trace.tested.size() == 1);
}

TEST_CASE("always right ends at the last go-right scale") {
  std::mt19937_64 gen(2);
  auto pool = fixtures::random_binary_pool(80, 2, gen);
  MarmannState state(pool, 0.1, 1);
  const auto sel = select_scale(state, constant_ratio(0.5));
  CHECK(sel.trace.outcome == SearchExit::LastRight);
  CHECK(sel.trace.went_left.empty());
  CHECK(sel.t_hat == sel.trace.tested.back().t);
  CHECK(sel.t_hat == state.scales().back());
  CHECK(sel.trace.tested.size() <= log2_floor(state.scales().size()) + 1);
}

TEST_CASE("always left picks the best go-left scale") {
  std::mt19937_64 gen(3);
  auto pool = fixtures::random_binary_pool(80, 2, gen);
  MarmannState state(pool, 0.1, 1);
  const auto sel = select_scale(state, constant_ratio(2.0));
  CHECK(sel.trace.outcome == SearchExit::LeftOnly);
  CHECK_FALSE(sel.trace.t0);
  CHECK(sel.trace.went_left.size() == sel.trace.tested.size());
  double best = 1e300;
  for (const auto& r : sel.trace.tested) best = std::min(best, *r.g_hat);
  CHECK(*sel.trace.record(sel.t_hat)->g_hat == best);
  CHECK(sel.trace.tested.size() <= log2_floor(state.scales().size()) + 1);
}

TEST_CASE("search windows are nested") {
  std::mt19937_64 gen(4);
  for (int rep = 0; rep < 10; ++rep) {
    auto pool = fixtures::random_binary_pool(90, 2, gen);
    MarmannState state(pool, 0.1, static_cast<std::uint64_t>(rep));
    const auto sel = select_scale(state);
    double lo = -1, hi = 1e300;
    for (const auto& r : sel.trace.tested) {
      CHECK(r.t > lo);
      CHECK(r.t < hi);
      CHECK(std::binary_search(state.scales().begin(), state.scales().end(), r.t));
      CHECK(r.N_t == state.fft().net_size(r.t));
      CHECK(r.phi_t == phi(r.N_t, state.m(), state.delta()));
      if (r.move == SearchMove::Right) lo = r.t;
      if (r.move == SearchMove::Left) hi = r.t;
    }
    CHECK(sel.trace.tested.size() <= log2_floor(state.scales().size()) + 1);
    CHECK(sel.trace.tested.size() <= 2 * std::log2(static_cast<double>(pool.size())));
  }
}

TEST_CASE("empty candidate set is a configuration error") {
  auto pool = fixtures::line_pool({0, 1, 2, 3, 4, 5}, {0, 1, 0, 1, 0, 1});
  MarmannState state(pool, 0.1, 1);
  if (state.scales().empty()) CHECK_THROWS_AS(select_scale(state), std::invalid_argument);
}

TEST_CASE("per-run label bound of the scale search") {
  std::mt19937_64 gen(5);
  for (int rep = 0; rep < 6; ++rep) {
    auto pool = fixtures::random_binary_pool(120, 2, gen, 0.1);
    const RunResult res = run_marmann(pool, 0.05, static_cast<std::uint64_t>(rep));
    const double m = static_cast<double>(pool.size()), delta = 0.05;
    const double N_hat = static_cast<double>(pool.dataset().size());
    (void)N_hat;
    const auto& tr = res.report.search_trace;
    const double G = g_value(res.report.emp_error, phi(build_fft(pool.dataset()).net_size(res.report.t_hat), pool.size(), delta));
    const double bound = 19240.0 * static_cast<double>(tr.tested.size()) * static_cast<double>(res.report.query_budget + 1) /
                         G * std::log(38480.0 * m * m / (delta * G));
    CHECK(static_cast<double>(res.report.search_requests) <= bound);
  }
}

TEST_CASE("G_min reference against a per-scale brute force") {
  std::mt19937_64 gen(6);
  for (int rep = 0; rep < 8; ++rep) {
    auto pool = fixtures::random_binary_pool(70, 2, gen, 0.1);
    const auto idx = build_fft(pool.dataset());
    const auto scales = candidate_scales(idx, pool.dataset());
    double best = 1e300, best_t = 0;
    for (double t : scales) {
      const double v = gb(nu_exact_binary(pool, t), idx.net_size(t), 0.05, pool.size());
      if (v < best) {
        best = v;
        best_t = t;
      }
    }
    const auto ref = g_min_reference(pool, 0.05);
    CHECK(ref.value == doctest::Approx(best).epsilon(1e-14));
    CHECK(ref.t_star == best_t);
    CHECK(ref.value >= ref.nu);
    CHECK(ref.exact);
  }
}

TEST_CASE("G_min on separated data") {
  std::vector<double> xs;
  std::vector<Label> ys;
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < 10; ++i) {
      xs.push_back(20.0 * c + 0.1 * i);
      ys.push_back(c % 2);
    }
  auto pool = fixtures::line_pool(xs, ys);
  const auto ref = g_min_reference(pool, 0.1);
  CHECK(ref.nu == 0.0);
  const double m = 30.0, N = static_cast<double>(ref.N);
  CHECK(ref.value == doctest::Approx(2.0 / 3 * ((N + 1) * std::log(m) + std::log(10.0)) / (m - N)));
}

TEST_CASE("unrestricted minimizer lies in the candidate set when G_min <= 1/3") {
  std::mt19937_64 gen(7);
  int informative = 0;
  for (int rep = 0; rep < 12; ++rep) {
    std::vector<double> xs;
    std::vector<Label> ys;
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 90; ++i) {
      const int c = i % 3;
      xs.push_back(5.0 * c + u(gen));
      ys.push_back((c % 2) ^ (u(gen) < 0.03 ? 1 : 0));
    }
    auto pool = fixtures::line_pool(xs, ys);
    const auto idx = build_fft(pool.dataset());
    const auto all = distinct_pairwise_distances(pool.dataset());
    const auto mon = candidate_scales(idx, pool.dataset());
    const auto full = g_min_reference(pool, idx, all, 0.05);
    if (full.value > 1.0 / 3) continue;
    ++informative;
    CHECK(std::binary_search(mon.begin(), mon.end(), full.t_star));
  }
  CHECK(informative > 0);
}

TEST_CASE("multiclass G_min is an interval") {
  std::mt19937_64 gen(8);
  auto data = fixtures::random_points(60, 2, gen);
  std::vector<Label> ys(60);
  for (std::size_t i = 0; i < 60; ++i) ys[i] = static_cast<Label>(i % 3);
  LabeledPool pool(data, ys, 3);
  const auto ref = g_min_reference(pool, 0.05);
  CHECK_FALSE(ref.exact);
  CHECK(ref.value <= ref.value_upper);
}
