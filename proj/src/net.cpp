#include "marmann/net.hpp"

#include <algorithm>
#include <stdexcept>

namespace marmann {

std::size_t FarthestFirstIndex::net_size(double t) const {
  if (order.empty()) return 0;
  // radii[1..m) is non-increasing: find the first k >= 1 with radii[k] <= t.
  const auto it = std::partition_point(radii.begin() + 1, radii.end(), [t](double r) { return r > t; });
  return static_cast<std::size_t>(it - radii.begin());
}

FarthestFirstIndex build_fft(const Dataset& d, PointId start) {
  const std::size_t m = d.size();
  if (m == 0) throw std::invalid_argument("build_fft: empty dataset");
  if (start >= m) throw std::invalid_argument("build_fft: start point out of range");

  FarthestFirstIndex idx;
  idx.order.reserve(m);
  idx.radii.reserve(m);
  std::vector<double> gap(m, std::numeric_limits<double>::infinity());
  std::vector<char> taken(m, 0);

  PointId next = start;
  double radius = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < m; ++k) {
    idx.order.push_back(next);
    idx.radii.push_back(radius);
    taken[next] = 1;
    const PointId added = next;
    radius = -1.0;
    for (PointId p = 0; p < m; ++p) {
      if (taken[p]) continue;
      gap[p] = std::min(gap[p], d(p, added));
      if (gap[p] > radius) {  // strict: ties keep the smaller id
        radius = gap[p];
        next = p;
      }
    }
  }
  return idx;
}

NetView net_at(const FarthestFirstIndex& idx, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("net_at: scale must be positive");
  const std::size_t k = idx.net_size(t);
  return NetView{t, std::vector<PointId>(idx.order.begin(), idx.order.begin() + static_cast<std::ptrdiff_t>(k))};
}

Partition partition_for(const Dataset& d, std::span<const PointId> net) {
  if (net.empty()) throw std::invalid_argument("partition_for: empty net");
  const std::size_t m = d.size();
  Partition part;
  part.assignment.assign(m, 0);
  part.regions.resize(net.size());
  for (PointId p = 0; p < m; ++p) {
    std::size_t best = 0;
    double best_d = d(p, net[0]);
    for (std::size_t r = 1; r < net.size(); ++r) {
      const double dr = d(p, net[r]);
      if (dr < best_d) {
        best_d = dr;
        best = r;
      }
    }
    part.assignment[p] = best;
    part.regions[best].push_back(p);
  }
  return part;
}

Partition partition_at(const FarthestFirstIndex& idx, const Dataset& d, double t) {
  const NetView net = net_at(idx, t);
  return partition_for(d, net.points);
}

std::vector<double> candidate_scales(const FarthestFirstIndex& idx, std::span<const double> distances) {
  const std::size_t m = idx.size();
  std::vector<double> out;
  std::size_t prev_n = std::numeric_limits<std::size_t>::max();
  for (double t : distances) {
    const std::size_t n = idx.net_size(t);
    if (2 * (n + 1) > m) continue;
    // The monotonicity clause of the candidate filter never fires for
    // farthest-first nets; fail loudly if that ever changes.
    if (n > prev_n) throw std::logic_error("candidate_scales: net size increased with scale");
    prev_n = n;
    out.push_back(t);
  }
  return out;
}

std::vector<double> candidate_scales(const FarthestFirstIndex& idx, const Dataset& d) {
  const auto dist = distinct_pairwise_distances(d);
  return candidate_scales(idx, dist);
}

std::vector<double> quantile_grid(std::span<const double> scales, std::size_t k) {
  if (k == 0) throw std::invalid_argument("quantile_grid: k must be positive");
  if (scales.size() <= k) return {scales.begin(), scales.end()};
  std::vector<double> out;
  out.reserve(k);
  for (std::size_t q = 0; q < k; ++q) {
    const std::size_t pos = k == 1 ? scales.size() / 2 : q * (scales.size() - 1) / (k - 1);
    if (out.empty() || out.back() != scales[pos]) out.push_back(scales[pos]);
  }
  return out;
}

std::vector<PointId> greedy_net(const Dataset& d, std::span<const PointId> candidates, double t) {
  std::vector<PointId> net;
  for (PointId p : candidates) {
    bool covered = false;
    for (PointId q : net) {
      if (d(p, q) <= t) {
        covered = true;
        break;
      }
    }
    if (!covered) net.push_back(p);
  }
  return net;
}

std::vector<PointId> greedy_net(const Dataset& d, double t) {
  std::vector<PointId> all(d.size());
  for (PointId p = 0; p < all.size(); ++p) all[p] = p;
  return greedy_net(d, all, t);
}

}  // namespace marmann
