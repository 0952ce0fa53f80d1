#pragma once

#include "marmann/metric.hpp"

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace marmann {

/// Farthest-first traversal of a dataset.
///
/// order[0] is the start point; every later point maximizes its distance to
/// the points before it (ties go to the smallest id).  radii[k] is that
/// distance at insertion time, with radii[0] = +inf.  The prefix of length k
/// is radii[k-1]-separated and covers the whole set within radii[k] (0 when
/// k == m), so one traversal yields a t-net for every scale t.
struct FarthestFirstIndex {
  std::vector<PointId> order;
  std::vector<double> radii;

  std::size_t size() const noexcept { return order.size(); }

  /// N(t): length of the shortest prefix whose covering radius is <= t.
  std::size_t net_size(double t) const;

  /// Covering radius of the prefix of length k (k >= 1).
  double covering_radius(std::size_t k) const {
    return k < radii.size() ? radii[k] : 0.0;
  }
};

FarthestFirstIndex build_fft(const Dataset& d, PointId start = 0);

/// A t-net realized as a traversal prefix.
struct NetView {
  double scale = 0.0;
  std::vector<PointId> points;

  std::size_t size() const noexcept { return points.size(); }
};

NetView net_at(const FarthestFirstIndex& idx, double t);

/// Voronoi-style regions of a net: every point goes to its nearest net point,
/// ties to the net point listed first.
struct Partition {
  std::vector<std::size_t> assignment;        // point id -> region index
  std::vector<std::vector<PointId>> regions;  // region index -> members, ascending ids

  std::size_t size() const noexcept { return regions.size(); }
};

Partition partition_for(const Dataset& d, std::span<const PointId> net);
Partition partition_at(const FarthestFirstIndex& idx, const Dataset& d, double t);

/// Candidate scales: distinct positive pairwise distances t with
/// N(t) + 1 <= m/2, ascending.  N is checked to be non-increasing along the
/// result (it always is for farthest-first nets).
std::vector<double> candidate_scales(const FarthestFirstIndex& idx, const Dataset& d);

/// Same filter applied to an already computed distance list.
std::vector<double> candidate_scales(const FarthestFirstIndex& idx, std::span<const double> distances);

/// Keeps k roughly evenly spaced quantiles of a sorted scale list (k >= 1).
std::vector<double> quantile_grid(std::span<const double> scales, std::size_t k);

/// In-order greedy t-net: scan points in id order (or the given subset order)
/// and keep a point when no kept point lies within distance t.
std::vector<PointId> greedy_net(const Dataset& d, double t);
std::vector<PointId> greedy_net(const Dataset& d, std::span<const PointId> candidates, double t);

}  // namespace marmann
