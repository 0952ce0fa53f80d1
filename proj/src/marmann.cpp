#include "marmann/marmann.hpp"

#include "marmann/bounds.hpp"
#include "marmann/nn_set.hpp"

namespace marmann {

RunResult run_marmann(MarmannState& state) {
  LabeledPool& pool = state.pool();
  ScaleSelection sel = select_scale(state);
  const QueryLedger after_search = pool.ledger();

  CompressionSet cs = generate_full_nn_set(state, sel.t_hat);
  NNClassifier h = reconstruct(std::move(cs), pool.dataset_ptr());

  RunReport rep;
  rep.t_hat = sel.t_hat;
  rep.compression_size = h.compression().size();
  rep.eps_hat_final = *sel.trace.record(sel.t_hat)->eps_hat;
  rep.emp_error = empirical_error(h, pool);
  rep.G_hat = gb(rep.emp_error, rep.compression_size, state.delta(), state.m(), 1);
  rep.unique_labels = pool.ledger().unique_queries;
  rep.total_requests = pool.ledger().total_requests;
  rep.search_unique_labels = after_search.unique_queries;
  rep.search_requests = after_search.total_requests;
  rep.query_budget = state.query_budget();
  rep.search_trace = std::move(sel.trace);
  return RunResult{std::move(h), std::move(rep), pool.ledger()};
}

RunResult run_marmann(LabeledPool& pool, double delta, std::uint64_t seed, RunOptions opts) {
  pool.reset_ledger();
  MarmannState state(pool, delta, seed, opts.grid);
  return run_marmann(state);
}

}  // namespace marmann
