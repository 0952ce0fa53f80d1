#include "marmann/estimation.hpp"

#include "marmann/nn_set.hpp"

namespace marmann {

EstimateOutcome estimate_err(MarmannState& state, double t, double theta) {
  const double m = static_cast<double>(state.m());
  const EstBerConfig cfg{theta, 52.0, state.delta() / (2.0 * m * m)};
  ScaleEntry& entry = state.scale_entry(t);
  auto draw = [&] {
    const auto [x, y] = sample_labeled_pair(state.pool(), state.rng());
    return decide_region(state, t, entry.partition.assignment[x]) != y;
  };
  return est_ber(draw, cfg);
}

}  // namespace marmann
