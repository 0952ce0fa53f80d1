#pragma once

#include "marmann/bounds.hpp"
#include "marmann/estimation.hpp"
#include "marmann/net.hpp"
#include "marmann/oracle.hpp"
#include "marmann/state.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace marmann {

enum class SearchMove { Right, Left, Stop };

/// Why the search loop ended.
enum class SearchExit {
  Break,          // a scale landed in [phi, 1.1 phi]
  LastRight,      // exhausted; t0 is the last go-right scale
  LeftOnly,       // exhausted without any go-right; argmin over went_left only
};

std::string to_string(SearchMove m);
std::string to_string(SearchExit e);

struct ScaleRecord {
  double t = 0.0;
  std::size_t N_t = 0;  // N(t), net at t itself
  double phi_t = 0.0;
  std::optional<double> eps_hat;
  std::optional<double> g_hat;
  std::size_t draws_used = 0;
  std::size_t rounds = 0;
  std::size_t new_unique_labels = 0;
  std::size_t new_requests = 0;
  SearchMove move = SearchMove::Stop;
};

struct SearchTrace {
  std::vector<ScaleRecord> tested;
  std::vector<double> went_left;
  std::optional<double> t0;
  SearchExit outcome = SearchExit::Break;
  std::size_t candidate_count = 0;

  const ScaleRecord* record(double t) const;
};

struct ScaleSelection {
  double t_hat = 0.0;
  SearchTrace trace;
};

/// Binary search over the candidate scales: test the lower median, go right
/// when eps_hat < phi, go left when eps_hat > 1.1 phi, stop otherwise.  The
/// result minimizes G(eps_hat) over the go-left scales and t0, ties to the
/// smallest scale.  Throws invalid_argument when no scale is available.
ScaleSelection select_scale(MarmannState& state);

/// Estimator used for each tested scale: (t, theta) -> estimate.
using ScaleEstimator = std::function<EstimateOutcome(double t, double theta)>;

/// Same search driven by a caller-supplied estimator (defaults to estimate_err).
ScaleSelection select_scale(MarmannState& state, const ScaleEstimator& estimator);

/// Error on the pool of the relabeled t/2 net as the run would complete it:
/// decided regions keep their labels, undecided ones are voted with a
/// private generator and the true labels.  Evaluation only, no ledger use.
double scale_error_oracle(const MarmannState& state, double t, std::uint64_t fork_seed);

/// min over scales of GB(nu(t), N(t), delta, m, 1).  Evaluation only.
struct GMinReference {
  double t_star = 0.0;
  double value = 0.0;        // exact for binary pools, lower end otherwise
  double value_upper = 0.0;  // equals value when exact
  double nu = 0.0;           // nu(t_star) (lower bound when not exact)
  std::size_t N = 0;
  bool exact = true;
};

GMinReference g_min_reference(const LabeledPool& pool, const FarthestFirstIndex& idx,
                              std::span<const double> scales, double delta);

/// Over the candidate scales of the pool.
GMinReference g_min_reference(const LabeledPool& pool, double delta);

}  // namespace marmann
