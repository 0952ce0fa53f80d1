#pragma once

#include "marmann/net.hpp"
#include "marmann/oracle.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace marmann {

/// Net, partition and decided labels for one scale t (the net is taken at t/2).
struct ScaleEntry {
  NetView net;
  Partition partition;
  std::vector<Label> decided;  // kUndecided until the region's vote has run

  static constexpr Label kUndecided = -1;

  std::size_t decided_count() const;
};

/// Per-scale memo keyed by the exact scale value.  Once a region label is
/// decided for (t, i) it is returned unchanged for the rest of the run.
class ScaleCache {
 public:
  ScaleEntry& at(double t, const FarthestFirstIndex& idx, const Dataset& d);
  const ScaleEntry* find(double t) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<double, ScaleEntry> entries_;
};

/// Restricts the candidate scales to k quantiles (0 keeps the full set).
/// Quantile grids are a speed knob, not part of the analyzed algorithm.
struct ScaleGrid {
  std::size_t quantiles = 0;
};

/// Run context of one active-learning run.
class MarmannState {
 public:
  /// Requires delta in (0, 1/4) and m >= max(6, |Y|).
  MarmannState(LabeledPool& pool, double delta, std::uint64_t seed, ScaleGrid grid = {});

  LabeledPool& pool() noexcept { return *pool_; }
  const LabeledPool& pool() const noexcept { return *pool_; }
  const Dataset& dataset() const noexcept { return pool_->dataset(); }
  const FarthestFirstIndex& fft() const noexcept { return fft_; }
  std::span<const double> scales() const noexcept { return scales_; }
  ScaleCache& cache() noexcept { return cache_; }
  const ScaleCache& cache() const noexcept { return cache_; }
  ScaleEntry& scale_entry(double t) { return cache_.at(t, fft_, dataset()); }
  Rng& rng() noexcept { return rng_; }
  double delta() const noexcept { return delta_; }
  std::size_t m() const noexcept { return pool_->size(); }
  /// Q(m): labels drawn per region vote.
  std::size_t query_budget() const noexcept { return budget_; }

 private:
  LabeledPool* pool_;
  FarthestFirstIndex fft_;
  std::vector<double> scales_;
  ScaleCache cache_;
  Rng rng_;
  double delta_;
  std::size_t budget_;
};

}  // namespace marmann
