#include "marmann/scale_selection.hpp"

#include "marmann/estimation.hpp"
#include "marmann/matching.hpp"
#include "marmann/nn_rule.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace marmann {

std::string to_string(SearchMove m) {
  switch (m) {
    case SearchMove::Right: return "right";
    case SearchMove::Left: return "left";
    case SearchMove::Stop: return "stop";
  }
  return "?";
}

std::string to_string(SearchExit e) {
  switch (e) {
    case SearchExit::Break: return "break";
    case SearchExit::LastRight: return "last_right";
    case SearchExit::LeftOnly: return "left_only";
  }
  return "?";
}

const ScaleRecord* SearchTrace::record(double t) const {
  for (const auto& r : tested)
    if (r.t == t) return &r;
  return nullptr;
}

ScaleSelection select_scale(MarmannState& state) {
  return select_scale(state, [&state](double t, double theta) { return estimate_err(state, t, theta); });
}

ScaleSelection select_scale(MarmannState& state, const ScaleEstimator& estimator) {
  const auto scales = state.scales();
  if (scales.empty()) throw std::invalid_argument("select_scale: no candidate scales (pool too small or degenerate)");

  const std::size_t m = state.m();
  ScaleSelection out;
  SearchTrace& trace = out.trace;
  trace.candidate_count = scales.size();
  std::optional<double> last_right;

  std::size_t lo = 0, hi = scales.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo - 1) / 2;
    ScaleRecord rec;
    rec.t = scales[mid];
    rec.N_t = state.fft().net_size(rec.t);
    rec.phi_t = phi(rec.N_t, m, state.delta());

    const QueryLedger before = state.pool().ledger();
    const EstimateOutcome est = estimator(rec.t, rec.phi_t);
    rec.eps_hat = est.p_hat;
    rec.g_hat = g_value(est.p_hat, rec.phi_t);
    rec.draws_used = est.draws;
    rec.rounds = est.rounds;
    rec.new_unique_labels = state.pool().ledger().unique_queries - before.unique_queries;
    rec.new_requests = state.pool().ledger().total_requests - before.total_requests;

    if (est.p_hat < rec.phi_t) {
      rec.move = SearchMove::Right;
      last_right = rec.t;
      lo = mid + 1;
    } else if (est.p_hat > 1.1 * rec.phi_t) {
      rec.move = SearchMove::Left;
      trace.went_left.push_back(rec.t);
      hi = mid;
    } else {
      rec.move = SearchMove::Stop;
      trace.t0 = rec.t;
    }
    trace.tested.push_back(rec);
    if (trace.t0) break;
  }

  if (trace.t0) {
    trace.outcome = SearchExit::Break;
  } else if (last_right) {
    trace.t0 = last_right;
    trace.outcome = SearchExit::LastRight;
  } else {
    trace.outcome = SearchExit::LeftOnly;
  }

  std::vector<double> pool_of(trace.went_left);
  if (trace.t0) pool_of.push_back(*trace.t0);
  if (pool_of.empty()) throw std::invalid_argument("select_scale: search produced no admissible scale");
  std::sort(pool_of.begin(), pool_of.end());

  double best_g = std::numeric_limits<double>::infinity();
  for (double t : pool_of) {
    const double g = *trace.record(t)->g_hat;
    if (g < best_g) {
      best_g = g;
      out.t_hat = t;
    }
  }
  return out;
}

double scale_error_oracle(const MarmannState& state, double t, std::uint64_t fork_seed) {
  const ScaleEntry* cached = state.cache().find(t);
  const LabeledPool& pool = state.pool();
  const FarthestFirstIndex& idx = state.fft();

  Partition local;
  std::vector<Label> labels;
  const Partition* part = nullptr;
  if (cached) {
    part = &cached->partition;
    labels = cached->decided;
  } else {
    local = partition_at(idx, pool.dataset(), t / 2.0);
    part = &local;
    labels.assign(local.size(), ScaleEntry::kUndecided);
  }

  Rng rng(fork_seed);
  std::vector<std::size_t> votes(pool.alphabet_size());
  std::size_t wrong = 0;
  for (std::size_t r = 0; r < part->size(); ++r) {
    const auto& region = part->regions[r];
    if (labels[r] == ScaleEntry::kUndecided) {
      std::fill(votes.begin(), votes.end(), 0);
      for (PointId p : sample_from_region(pool, region, state.query_budget(), rng))
        ++votes[static_cast<std::size_t>(pool.truth(p))];
      labels[r] = static_cast<Label>(std::max_element(votes.begin(), votes.end()) - votes.begin());
    }
    for (PointId p : region) wrong += pool.truth(p) != labels[r];
  }
  return static_cast<double>(wrong) / static_cast<double>(pool.size());
}

namespace {

// Within a run of scales sharing N(t), nu is non-decreasing in t, so only
// the first scale of each run can minimize GB.
std::vector<double> group_leaders(const FarthestFirstIndex& idx, std::span<const double> scales) {
  std::vector<double> out;
  std::size_t prev = static_cast<std::size_t>(-1);
  for (double t : scales) {
    const std::size_t n = idx.net_size(t);
    if (n != prev) out.push_back(t);
    prev = n;
  }
  return out;
}

}  // namespace

GMinReference g_min_reference(const LabeledPool& pool, const FarthestFirstIndex& idx,
                              std::span<const double> scales, double delta) {
  if (scales.empty()) throw std::invalid_argument("g_min_reference: no scales");
  if (!std::is_sorted(scales.begin(), scales.end()))
    throw std::invalid_argument("g_min_reference: scales must be ascending");
  const std::size_t m = pool.size();
  const auto leaders = group_leaders(idx, scales);
  GMinReference best;
  best.value = best.value_upper = std::numeric_limits<double>::infinity();

  if (pool.alphabet_size() <= 2) {
    BlockingMatchingSweep sweep(pool);
    for (double t : leaders) {
      const double nu = static_cast<double>(sweep.advance(t)) / static_cast<double>(m);
      if (nu >= best.value) break;  // GB > nu and nu only grows from here
      const std::size_t n = idx.net_size(t);
      if (n >= m) continue;
      const double v = gb(nu, n, delta, m, 1);
      if (v < best.value) best = {t, v, v, nu, n, true};
    }
    return best;
  }

  best.exact = false;
  for (double t : leaders) {
    const std::size_t n = idx.net_size(t);
    if (n >= m) continue;
    const NuBounds nb = nu_bounds_multiclass(pool, idx, t);
    const double lo = gb(nb.lower, n, delta, m, 1);
    const double hi = gb(nb.upper, n, delta, m, 1);
    if (lo < best.value) {
      best.value = lo;
      best.t_star = t;
      best.nu = nb.lower;
      best.N = n;
    }
    best.value_upper = std::min(best.value_upper, hi);
  }
  return best;
}

GMinReference g_min_reference(const LabeledPool& pool, double delta) {
  const FarthestFirstIndex idx = build_fft(pool.dataset(), 0);
  const auto scales = candidate_scales(idx, pool.dataset());
  return g_min_reference(pool, idx, scales, delta);
}

}  // namespace marmann
