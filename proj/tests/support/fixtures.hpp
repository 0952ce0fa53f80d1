#pragma once

// Small builders and brute-force oracles shared by the unit and acceptance
// tests.  Oracles deliberately avoid the library's own algorithms.

#include "marmann/metric.hpp"
#include "marmann/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <random>
#include <utility>
#include <vector>

namespace fixtures {

using marmann::Dataset;
using marmann::Label;
using marmann::LabeledPool;
using marmann::PointId;

inline std::shared_ptr<const Dataset> line(const std::vector<double>& xs) {
  Eigen::MatrixXd p(static_cast<Eigen::Index>(xs.size()), 1);
  for (std::size_t i = 0; i < xs.size(); ++i) p(static_cast<Eigen::Index>(i), 0) = xs[i];
  return std::make_shared<const Dataset>(Dataset::from_points(p));
}

inline LabeledPool line_pool(const std::vector<double>& xs, std::vector<Label> ys, std::size_t alphabet = 0) {
  return LabeledPool(line(xs), std::move(ys), alphabet);
}

inline std::shared_ptr<const Dataset> random_points(std::size_t m, int dim, std::mt19937_64& rng,
                                                    marmann::Norm norm = marmann::Norm::L2) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd p(static_cast<Eigen::Index>(m), dim);
  for (Eigen::Index r = 0; r < p.rows(); ++r)
    for (Eigen::Index c = 0; c < p.cols(); ++c) p(r, c) = u(rng);
  return std::make_shared<const Dataset>(Dataset::from_points(p, norm));
}

/// Random binary pool on continuous coordinates with label noise near a
/// random linear boundary.
inline LabeledPool random_binary_pool(std::size_t m, int dim, std::mt19937_64& rng, double flip = 0.15) {
  auto data = random_points(m, dim, rng);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Label> ys(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double s = data->points()(static_cast<Eigen::Index>(i), 0);
    ys[i] = (s > 0.5) != (u(rng) < flip) ? 1 : 0;
  }
  return LabeledPool(data, std::move(ys), 2);
}

/// Brute-force minimum vertex cover size over the vertices touched by `edges`
/// (at most 24 such vertices).
inline std::size_t brute_min_cover(const std::vector<std::pair<PointId, PointId>>& edges) {
  std::vector<PointId> verts;
  for (auto [a, b] : edges) {
    verts.push_back(a);
    verts.push_back(b);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const std::size_t n = verts.size();
  if (n > 24) throw std::invalid_argument("brute_min_cover: too many vertices");
  auto pos = [&](PointId p) { return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), p) - verts.begin()); };
  std::vector<std::pair<std::size_t, std::size_t>> local;
  for (auto [a, b] : edges) local.emplace_back(pos(a), pos(b));
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    bool ok = true;
    for (auto [a, b] : local)
      if (!((mask >> a) & 1u) && !((mask >> b) & 1u)) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

/// Blocking pairs recomputed straight from the distance table.
inline std::vector<std::pair<PointId, PointId>> brute_blocking(const LabeledPool& pool, double t) {
  std::vector<std::pair<PointId, PointId>> out;
  for (PointId i = 0; i < pool.size(); ++i)
    for (PointId j = i + 1; j < pool.size(); ++j)
      if (pool.truth(i) != pool.truth(j) && pool.dataset()(i, j) < t) out.emplace_back(i, j);
  return out;
}

/// Smallest prefix length of `order` whose covering radius is <= t (brute force).
inline std::size_t brute_net_size(const Dataset& d, const std::vector<PointId>& order, double t) {
  for (std::size_t k = 1; k <= order.size(); ++k) {
    double cover = 0.0;
    for (PointId p = 0; p < d.size(); ++p) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < k; ++j) best = std::min(best, d(p, order[j]));
      cover = std::max(cover, best);
    }
    if (cover <= t) return k;
  }
  return order.size();
}

/// Exact L1 distance between Rad_b^k and Rad_{-b}^k by enumerating all 2^k outcomes.
inline double brute_bayes(std::size_t k, double b) {
  const double hi = (1.0 + b) / 2.0, lo = (1.0 - b) / 2.0;
  double l1 = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    double p = 1.0, q = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      const bool plus = (mask >> i) & 1u;
      p *= plus ? hi : lo;
      q *= plus ? lo : hi;
    }
    l1 += std::abs(p - q);
  }
  return 0.5 * (1.0 - 0.5 * l1);
}

/// Two-sided slack for a binomial frequency check.
inline double binomial_slack(double p, std::size_t n, double z = 3.0) {
  return z * std::sqrt(std::max(p * (1.0 - p), 1e-12) / static_cast<double>(n));
}

}  // namespace fixtures
