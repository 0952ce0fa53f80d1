#include "marmann/matching.hpp"

#include "marmann/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace marmann {
namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

void require_binary(const LabeledPool& pool, const char* what) {
  if (pool.alphabet_size() > 2) throw std::domain_error(std::string(what) + ": binary labels required");
}

// Left side: label-0 points; right side: label-1 points.
struct Sides {
  std::vector<PointId> left, right;
  std::vector<std::size_t> slot;  // point id -> index within its side
};

Sides split_sides(const LabeledPool& pool) {
  Sides s;
  s.slot.resize(pool.size());
  for (PointId p = 0; p < pool.size(); ++p) {
    auto& side = pool.truth(p) == 0 ? s.left : s.right;
    s.slot[p] = side.size();
    side.push_back(p);
  }
  return s;
}

}  // namespace

BipartiteMatcher::BipartiteMatcher(std::size_t left, std::size_t right)
    : adj_(left), mate_left_(left, npos), mate_right_(right, npos), layer_(left), right_(right) {}

void BipartiteMatcher::add_edge(std::size_t u, std::size_t v) {
  if (u >= adj_.size() || v >= right_) throw std::out_of_range("BipartiteMatcher: vertex out of range");
  adj_[u].push_back(v);
}

bool BipartiteMatcher::bfs() {
  std::deque<std::size_t> queue;
  bool found = false;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    if (mate_left_[u] == npos) {
      layer_[u] = 0;
      queue.push_back(u);
    } else {
      layer_[u] = kInf;
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj_[u]) {
      const std::size_t w = mate_right_[v];
      if (w == npos) {
        found = true;
      } else if (layer_[w] == kInf) {
        layer_[w] = layer_[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return found;
}

bool BipartiteMatcher::dfs(std::size_t u) {
  for (std::size_t v : adj_[u]) {
    const std::size_t w = mate_right_[v];
    if (w == npos || (layer_[w] == layer_[u] + 1 && dfs(w))) {
      mate_left_[u] = v;
      mate_right_[v] = u;
      return true;
    }
  }
  layer_[u] = kInf;
  return false;
}

std::size_t BipartiteMatcher::maximize() {
  while (bfs()) {
    for (std::size_t u = 0; u < adj_.size(); ++u)
      if (mate_left_[u] == npos && dfs(u)) ++matched_;
  }
  return matched_;
}

BipartiteMatcher::Cover BipartiteMatcher::min_vertex_cover() const {
  // Z = vertices reachable from free left vertices along alternating paths.
  std::vector<char> seen_left(adj_.size(), 0), seen_right(right_, 0);
  std::deque<std::size_t> queue;
  for (std::size_t u = 0; u < adj_.size(); ++u)
    if (mate_left_[u] == npos) {
      seen_left[u] = 1;
      queue.push_back(u);
    }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj_[u]) {
      if (seen_right[v] || mate_left_[u] == v) continue;
      seen_right[v] = 1;
      const std::size_t w = mate_right_[v];
      if (w != npos && !seen_left[w]) {
        seen_left[w] = 1;
        queue.push_back(w);
      }
    }
  }
  Cover c;
  for (std::size_t u = 0; u < adj_.size(); ++u)
    if (!seen_left[u]) c.left.push_back(u);
  for (std::size_t v = 0; v < right_; ++v)
    if (seen_right[v]) c.right.push_back(v);
  return c;
}

std::vector<std::pair<PointId, PointId>> blocking_pairs(const LabeledPool& pool, double t) {
  const Dataset& d = pool.dataset();
  std::vector<std::pair<PointId, PointId>> out;
  for (PointId i = 0; i < pool.size(); ++i)
    for (PointId j = i + 1; j < pool.size(); ++j)
      if (pool.truth(i) != pool.truth(j) && d(i, j) < t) out.emplace_back(i, j);
  return out;
}

std::size_t greedy_maximal_matching(std::span<const std::pair<PointId, PointId>> pairs, std::size_t m) {
  std::vector<char> used(m, 0);
  std::size_t size = 0;
  for (const auto& [i, j] : pairs) {
    if (used[i] || used[j]) continue;
    used[i] = used[j] = 1;
    ++size;
  }
  return size;
}

std::vector<PointId> min_blocking_cover(const LabeledPool& pool, double t) {
  require_binary(pool, "min_blocking_cover");
  const Sides s = split_sides(pool);
  BipartiteMatcher matcher(s.left.size(), s.right.size());
  const Dataset& d = pool.dataset();
  for (std::size_t u = 0; u < s.left.size(); ++u)
    for (std::size_t v = 0; v < s.right.size(); ++v)
      if (d(s.left[u], s.right[v]) < t) matcher.add_edge(u, v);
  matcher.maximize();
  const auto cover = matcher.min_vertex_cover();
  std::vector<PointId> out;
  for (std::size_t u : cover.left) out.push_back(s.left[u]);
  for (std::size_t v : cover.right) out.push_back(s.right[v]);
  std::sort(out.begin(), out.end());
  return out;
}

BlockingMatchingSweep::BlockingMatchingSweep(const LabeledPool& pool)
    : matcher_([&] {
        require_binary(pool, "BlockingMatchingSweep");
        std::size_t zeros = 0;
        for (Label y : pool.truth()) zeros += (y == 0);
        return BipartiteMatcher(zeros, pool.size() - zeros);
      }()) {
  const Sides s = split_sides(pool);
  const Dataset& d = pool.dataset();
  edges_.reserve(s.left.size() * s.right.size());
  for (std::size_t u = 0; u < s.left.size(); ++u)
    for (std::size_t v = 0; v < s.right.size(); ++v) edges_.push_back({d(s.left[u], s.right[v]), u, v});
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.dist < b.dist; });
}

std::size_t BlockingMatchingSweep::advance(double t) {
  if (t < last_t_) throw std::invalid_argument("BlockingMatchingSweep: scales must be non-decreasing");
  last_t_ = t;
  bool added = false;
  while (next_ < edges_.size() && edges_[next_].dist < t) {
    matcher_.add_edge(edges_[next_].u, edges_[next_].v);
    ++next_;
    added = true;
  }
  if (added) matcher_.maximize();
  return matcher_.size();
}

}  // namespace marmann
