#pragma once

#include "marmann/nn_rule.hpp"
#include "marmann/oracle.hpp"
#include "marmann/scale_selection.hpp"
#include "marmann/state.hpp"

#include <cstddef>
#include <cstdint>

namespace marmann {

struct RunOptions {
  ScaleGrid grid;
};

struct RunReport {
  double t_hat = 0.0;
  std::size_t compression_size = 0;  // N(t_hat / 2)
  double eps_hat_final = 0.0;        // search estimate at t_hat
  double emp_error = 0.0;            // exact error of the output on the pool
  double G_hat = 0.0;                // GB(emp_error, compression_size, delta, m, 1)
  std::size_t unique_labels = 0;
  std::size_t total_requests = 0;
  std::size_t search_unique_labels = 0;
  std::size_t search_requests = 0;
  std::size_t query_budget = 0;
  SearchTrace search_trace;
};

struct RunResult {
  NNClassifier classifier;
  RunReport report;
  QueryLedger ledger;
};

/// Select a scale, label the whole t_hat/2 net (reusing memoized votes) and
/// return its nearest-neighbor rule.  The pool's ledger is reset first.
RunResult run_marmann(LabeledPool& pool, double delta, std::uint64_t seed, RunOptions opts = {});

/// Same, on a prepared state (lets callers inspect the scale cache afterwards).
RunResult run_marmann(MarmannState& state);

}  // namespace marmann
