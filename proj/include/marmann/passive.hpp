#pragma once

#include "marmann/net.hpp"
#include "marmann/nn_rule.hpp"
#include "marmann/oracle.hpp"

#include <cstddef>
#include <optional>
#include <span>

namespace marmann {

/// Full-label learner output.  labels_used is always m.
struct PassiveResult {
  double t_star = 0.0;
  CompressionSet compression;
  double emp_error = 0.0;
  double gb_value = 0.0;
  std::size_t labels_used = 0;
};

/// Majority-relabeled t/2 net at the scale minimizing GB(eps(t), N(t/2), delta, m, 1);
/// ties to the smallest scale.  Scales default to the pool's candidate set.
PassiveResult passive_relabel(const LabeledPool& pool, double delta);
PassiveResult passive_relabel(const LabeledPool& pool, const FarthestFirstIndex& idx,
                              std::span<const double> scales, double delta);

/// Binary pools only: drop a minimum cover of the t-blocking graph, net the
/// survivors greedily at t with their own labels and score GB(nu(t), |net|, delta, m, 1).
PassiveResult passive_separation_binary(const LabeledPool& pool, double delta);
PassiveResult passive_separation_binary(const LabeledPool& pool, std::span<const double> scales, double delta);

}  // namespace marmann
