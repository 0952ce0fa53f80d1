#include "marmann/nn_set.hpp"

#include "marmann/net.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace marmann {

std::size_t ScaleEntry::decided_count() const {
  return static_cast<std::size_t>(std::count_if(decided.begin(), decided.end(), [](Label y) { return y != kUndecided; }));
}

ScaleEntry& ScaleCache::at(double t, const FarthestFirstIndex& idx, const Dataset& d) {
  auto it = entries_.find(t);
  if (it != entries_.end()) return it->second;
  ScaleEntry entry;
  entry.net = net_at(idx, t / 2.0);
  entry.partition = partition_for(d, entry.net.points);
  entry.decided.assign(entry.net.size(), ScaleEntry::kUndecided);
  return entries_.emplace(t, std::move(entry)).first->second;
}

const ScaleEntry* ScaleCache::find(double t) const {
  const auto it = entries_.find(t);
  return it == entries_.end() ? nullptr : &it->second;
}

MarmannState::MarmannState(LabeledPool& pool, double delta, std::uint64_t seed, ScaleGrid grid)
    : pool_(&pool), rng_(seed), delta_(delta) {
  if (!(delta > 0.0 && delta < 0.25)) throw std::invalid_argument("delta must lie in (0, 1/4)");
  const std::size_t m = pool.size();
  if (m < std::max<std::size_t>(6, pool.alphabet_size()))
    throw std::invalid_argument("the pool needs m >= max(6, |Y|) points");
  fft_ = build_fft(pool.dataset(), 0);
  scales_ = candidate_scales(fft_, pool.dataset());
  if (grid.quantiles > 0) scales_ = quantile_grid(scales_, grid.quantiles);
  budget_ = marmann::query_budget(m, delta);
}

std::size_t query_budget(std::size_t m, double delta) {
  if (m < 1) throw std::invalid_argument("query_budget: m must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("query_budget: delta must lie in (0, 1)");
  const double mm = static_cast<double>(m);
  return static_cast<std::size_t>(std::ceil(18.0 * std::log(4.0 * mm * mm * mm / delta)));
}

Label decide_region(MarmannState& state, double t, std::size_t region) {
  ScaleEntry& entry = state.scale_entry(t);
  if (region >= entry.net.size()) throw std::out_of_range("generate_nn_set: region index out of range");
  Label& slot = entry.decided[region];
  if (slot != ScaleEntry::kUndecided) return slot;

  LabeledPool& pool = state.pool();
  const auto draws = sample_from_region(pool, entry.partition.regions[region], state.query_budget(), state.rng());
  std::vector<std::size_t> votes(pool.alphabet_size(), 0);
  for (PointId p : draws) ++votes[static_cast<std::size_t>(pool.query_label(p))];
  slot = static_cast<Label>(std::max_element(votes.begin(), votes.end()) - votes.begin());
  return slot;
}

CompressionSet generate_nn_set(MarmannState& state, double t, std::span<const std::size_t> regions) {
  std::vector<std::size_t> order(regions.begin(), regions.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  std::vector<CompressionEntry> entries;
  entries.reserve(order.size());
  for (std::size_t i : order) {
    const Label y = decide_region(state, t, i);
    entries.push_back({state.scale_entry(t).net.points[i], y});
  }
  return CompressionSet(std::move(entries));
}

CompressionSet generate_full_nn_set(MarmannState& state, double t) {
  const std::size_t n = state.scale_entry(t).net.size();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return generate_nn_set(state, t, all);
}

}  // namespace marmann
