#include "fixtures.hpp"

#include "marmann/nn_set.hpp"

#include <doctest.h>

using namespace marmann;

TEST_CASE("query budget") {
  CHECK(query_budget(100, 0.1) == 316);  // 18 ln(4e7) = 315.08
  CHECK(query_budget(100, 0.1) == static_cast<std::size_t>(std::ceil(18 * std::log(4e6 / 0.1))));
  CHECK(query_budget(1, 0.999999) == 25);
  std::size_t prev = 0;
  for (std::size_t m = 1; m < 5000; m += 37) {
    CHECK(query_budget(m, 0.05) >= prev);
    prev = query_budget(m, 0.05);
  }
  CHECK(query_budget(100, 0.01) >= query_budget(100, 0.1));
  CHECK_THROWS(query_budget(0, 0.1));
}

TEST_CASE("pure regions take their label, memoized labels cost nothing") {
  auto pool = fixtures::line_pool({0, 0.1, 0.2, 5, 5.1, 5.2, 9, 9.1}, {1, 1, 1, 0, 0, 0, 1, 1});
  MarmannState state(pool, 0.1, 3);
  const double t = 2.0;
  const auto cs = generate_full_nn_set(state, t);
  REQUIRE(cs.size() == 3);
  for (const auto& e : cs.entries()) CHECK(e.label == pool.truth(e.id));
  const auto before = pool.ledger();
  const std::vector<std::size_t> some{2, 0};
  const auto again = generate_nn_set(state, t, some);
  CHECK(pool.ledger() == before);
  CHECK(again.entries()[0].id == cs.entries()[0].id);  // ascending region order
  CHECK(again.entries()[1].id == cs.entries()[2].id);
  const std::vector<std::size_t> bad{3};
  CHECK_THROWS_AS(generate_nn_set(state, t, bad), std::out_of_range);
}

TEST_CASE("fresh region costs at most min(Q, |P_i|) unique labels") {
  std::mt19937_64 gen(6);
  auto pool = fixtures::random_binary_pool(150, 2, gen);
  MarmannState state(pool, 0.1, 4);
  const double t = state.scales()[state.scales().size() / 3];
  const ScaleEntry& entry = state.scale_entry(t);
  for (std::size_t r = 0; r < entry.net.size(); ++r) {
    const auto before = pool.ledger();
    decide_region(state, t, r);
    const std::size_t fresh = pool.ledger().unique_queries - before.unique_queries;
    CHECK(fresh <= std::min(state.query_budget(), entry.partition.regions[r].size()));
    CHECK(pool.ledger().total_requests - before.total_requests == state.query_budget());
  }
}

TEST_CASE("deterministic replay") {
  std::mt19937_64 gen(7);
  auto pool = fixtures::random_binary_pool(100, 2, gen);
  auto copy = pool;
  MarmannState a(pool, 0.1, 99), b(copy, 0.1, 99);
  const double t = a.scales()[a.scales().size() / 2];
  CHECK(generate_full_nn_set(a, t) == generate_full_nn_set(b, t));
  CHECK(pool.ledger() == copy.ledger());
}

TEST_CASE("full-net error stays within 4 nu(t)") {
  std::mt19937_64 gen(8);
  auto pool = fixtures::random_binary_pool(120, 2, gen, 0.05);
  const auto idx = build_fft(pool.dataset());
  const auto scales = candidate_scales(idx, pool.dataset());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    pool.reset_ledger();
    MarmannState state(pool, 0.1, seed);
    for (std::size_t k = 0; k < scales.size(); k += std::max<std::size_t>(1, scales.size() / 5)) {
      const double t = scales[k];
      const NNClassifier h(generate_full_nn_set(state, t), pool.dataset_ptr());
      CHECK(empirical_error(h, pool) <= 4 * nu_exact_binary(pool, t) + 1e-12);
    }
  }
}

TEST_CASE("state preconditions") {
  auto small = fixtures::line_pool({0, 1, 2, 3, 4}, {0, 1, 0, 1, 0});
  CHECK_THROWS(MarmannState(small, 0.1, 1));
  auto ok = fixtures::line_pool({0, 1, 2, 3, 4, 5}, {0, 1, 0, 1, 0, 1});
  CHECK_THROWS(MarmannState(ok, 0.25, 1));
  CHECK_NOTHROW(MarmannState(ok, 0.2, 1));
}
