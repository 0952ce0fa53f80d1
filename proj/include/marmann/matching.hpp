#pragma once

#include "marmann/metric.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace marmann {

class LabeledPool;

/// Hopcroft-Karp maximum matching that tolerates edge insertion between
/// calls to maximize(); phases restart from the current matching.
class BipartiteMatcher {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BipartiteMatcher(std::size_t left, std::size_t right);

  void add_edge(std::size_t u, std::size_t v);
  std::size_t maximize();
  std::size_t size() const noexcept { return matched_; }

  std::size_t mate_of_left(std::size_t u) const { return mate_left_[u]; }

  struct Cover {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    std::size_t size() const noexcept { return left.size() + right.size(); }
  };

  /// Minimum vertex cover via Koenig's construction; call after maximize().
  Cover min_vertex_cover() const;

 private:
  bool bfs();
  bool dfs(std::size_t u);

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> mate_left_, mate_right_;
  std::vector<std::size_t> layer_;
  std::size_t right_ = 0;
  std::size_t matched_ = 0;
};

/// Pairs (i, j), i < j, with different labels at distance strictly below t,
/// in lexicographic order.  A pair at distance exactly t is not blocking.
std::vector<std::pair<PointId, PointId>> blocking_pairs(const LabeledPool& pool, double t);

/// Size of the greedy maximal matching over pairs taken in the given order.
std::size_t greedy_maximal_matching(std::span<const std::pair<PointId, PointId>> pairs, std::size_t m);

/// Minimum vertex cover of the t-blocking graph of a binary pool.
std::vector<PointId> min_blocking_cover(const LabeledPool& pool, double t);

/// Maximum matching of the t-blocking graph of a binary pool, maintained as
/// t grows.  The matching size equals the minimum cover size, i.e. m * nu(t).
class BlockingMatchingSweep {
 public:
  explicit BlockingMatchingSweep(const LabeledPool& pool);

  /// Adds every blocking pair with distance < t (t must not decrease).
  std::size_t advance(double t);
  std::size_t matching_size() const noexcept { return matcher_.size(); }

 private:
  struct Edge {
    double dist;
    std::size_t u, v;
  };
  std::vector<Edge> edges_;
  std::size_t next_ = 0;
  double last_t_ = 0.0;
  BipartiteMatcher matcher_;
};

}  // namespace marmann
