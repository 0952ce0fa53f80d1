#include "fixtures.hpp"

#include "marmann/estimation.hpp"
#include "marmann/nn_set.hpp"

#include <doctest.h>

#include <cmath>

using namespace marmann;

namespace {

// Independent transcription of the doubling schedule for a constant stream.
std::size_t reference_draws_constant(int bit, const EstBerConfig& c) {
  const double K = 4 * c.beta / c.theta * std::log(8 * c.beta / (c.delta * c.theta));
  const int last = static_cast<int>(std::ceil(std::log2(c.beta * std::log(2 * K / c.delta) / c.theta)));
  std::size_t n = 4;
  for (int i = 3; i <= last; ++i) {
    n = std::size_t{1} << i;
    if (bit > c.beta * std::log(2.0 * n / c.delta) / n) break;
  }
  return n;
}

}  // namespace

TEST_CASE("configuration checks") {
  auto zero = [] { return 0; };
  CHECK_THROWS_AS(est_ber(zero, EstBerConfig{0.1, 6.9, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(est_ber(zero, EstBerConfig{0.0, 7, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(est_ber(zero, EstBerConfig{0.1, 7, 1.0}), std::invalid_argument);
  CHECK(est_ber_f(52) <= 1.25);
}

TEST_CASE("all-zero stream runs every round and returns 0") {
  const EstBerConfig c{0.1, 7, 0.1};
  const auto out = est_ber([] { return 0; }, c);
  CHECK(out.p_hat == 0.0);
  CHECK(out.draws == reference_draws_constant(0, c));
  CHECK(out.draws == (std::size_t{1} << est_ber_last_round(c)));
  CHECK(out.rounds == static_cast<std::size_t>(est_ber_last_round(c) - 2));
}

TEST_CASE("all-one stream stops at the first round whose predicate fires") {
  const EstBerConfig c{0.5, 7, 0.1};
  const auto out = est_ber([] { return 1; }, c);
  CHECK(out.p_hat == 1.0);
  // 1 > 7 ln(2n/0.1)/n first holds at n = 64 (n = 32 gives 45.2/32 > 1).
  CHECK(out.draws == 64);
  CHECK(out.draws == reference_draws_constant(1, c));
  CHECK(out.rounds == 4);
}

TEST_CASE("draw schedule, draw bound and the K cap on random coins") {
  Rng rng(17);
  for (double p : {0.0, 0.02, 0.2, 0.6, 1.0})
    for (double theta : {0.03, 0.3})
      for (double beta : {7.0, 52.0})
        for (int rep = 0; rep < 20; ++rep) {
          const EstBerConfig c{theta, beta, 0.05};
          std::bernoulli_distribution coin(p);
          std::size_t seen = 0;
          const auto out = est_ber([&] { ++seen; return coin(rng); }, c);
          CHECK(out.draws == seen);
          CHECK(out.draws == (out.rounds == 0 ? 4 : std::size_t{1} << (out.rounds + 2)));
          CHECK(static_cast<double>(out.draws) <= est_ber_draw_bound(c, p));
          CHECK(static_cast<double>(out.draws) <= est_ber_cap(c));
          CHECK(out.p_hat >= 0.0);
          CHECK(out.p_hat <= 1.0);
        }
}

TEST_CASE("accuracy contract holds in nearly all runs") {
  Rng rng(23);
  const double delta = 0.05;
  for (double p : {0.01, 0.3})
    for (double theta : {0.05, 0.2}) {
      const EstBerConfig c{theta, 7, delta};
      const double f = est_ber_f(c.beta);
      std::size_t fails = 0, runs = 400;
      std::bernoulli_distribution coin(p);
      for (std::size_t r = 0; r < runs; ++r) {
        const auto out = est_ber([&] { return coin(rng); }, c);
        const bool ok = out.p_hat <= theta ? p <= f * theta : (p / f <= out.p_hat && out.p_hat <= p / (2 - f));
        fails += !ok;
      }
      CHECK(static_cast<double>(fails) / runs <= delta + 3 * std::sqrt(delta / runs));
    }
}

TEST_CASE("estimate_err on a perfectly separable pool is zero") {
  auto pool = fixtures::line_pool({0, 0.1, 0.2, 0.3, 10, 10.1, 10.2, 10.3}, {0, 0, 0, 0, 1, 1, 1, 1});
  MarmannState state(pool, 0.1, 5);
  const auto out = estimate_err(state, 1.0, 0.2);
  CHECK(out.p_hat == 0.0);
}

TEST_CASE("estimate_err label accounting") {
  std::mt19937_64 gen(2);
  auto pool = fixtures::random_binary_pool(120, 2, gen);
  MarmannState state(pool, 0.1, 9);
  const double t = state.scales()[state.scales().size() / 2];
  const auto out = estimate_err(state, t, 0.2);
  const ScaleEntry& e = state.scale_entry(t);
  // one pair draw per Bernoulli sample plus Q votes per decided region
  CHECK(pool.ledger().total_requests == out.draws + state.query_budget() * e.decided_count());
  CHECK(pool.ledger().unique_queries <= std::min(pool.size(), out.draws * (state.query_budget() + 1)));
}
