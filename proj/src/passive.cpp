#include "marmann/passive.hpp"

#include "marmann/bounds.hpp"
#include "marmann/matching.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace marmann {

namespace {

// Pool errors of the majority-relabeled traversal prefixes of every length in
// `wanted` (ascending).  Prefixes grow one point at a time; only points that
// are strictly closer to the new net point change region, matching the
// earliest-net-point tie rule of partition_for.
std::map<std::size_t, std::size_t> prefix_majority_errors(const LabeledPool& pool, const FarthestFirstIndex& idx,
                                                          const std::vector<std::size_t>& wanted) {
  std::map<std::size_t, std::size_t> out;
  if (wanted.empty()) return out;
  const Dataset& d = pool.dataset();
  const std::size_t m = pool.size(), k_max = wanted.back(), ys = pool.alphabet_size();

  std::vector<std::size_t> region(m, 0);
  std::vector<double> near(m);
  std::vector<std::size_t> counts(k_max * ys, 0);  // counts[r * ys + y]
  for (PointId p = 0; p < m; ++p) {
    near[p] = d(p, idx.order[0]);
    ++counts[static_cast<std::size_t>(pool.truth(p))];
  }

  auto errors = [&](std::size_t k) {
    std::size_t agree = 0;
    for (std::size_t r = 0; r < k; ++r)
      agree += *std::max_element(counts.begin() + static_cast<long>(r * ys), counts.begin() + static_cast<long>((r + 1) * ys));
    return m - agree;
  };

  std::size_t next = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k > 1) {
      const PointId c = idx.order[k - 1];
      const std::size_t r_new = k - 1;
      for (PointId p = 0; p < m; ++p) {
        const double dc = d(p, c);
        if (dc < near[p]) {
          const auto y = static_cast<std::size_t>(pool.truth(p));
          --counts[region[p] * ys + y];
          ++counts[r_new * ys + y];
          region[p] = r_new;
          near[p] = dc;
        }
      }
    }
    if (k == wanted[next]) {
      out[k] = errors(k);
      ++next;
    }
  }
  return out;
}

}  // namespace

PassiveResult passive_relabel(const LabeledPool& pool, const FarthestFirstIndex& idx,
                              std::span<const double> scales, double delta) {
  const std::size_t m = pool.size();
  // Scales sharing N(t/2) share the relabeled net; keep the smallest of each.
  // N(t/2) is non-increasing along ascending scales, so groups are contiguous.
  if (!std::is_sorted(scales.begin(), scales.end()))
    throw std::invalid_argument("passive_relabel: scales must be ascending");
  std::vector<std::pair<std::size_t, double>> groups;
  for (double t : scales) {
    const std::size_t k = idx.net_size(t / 2.0);
    if (k >= m) continue;
    if (groups.empty() || groups.back().first != k) groups.emplace_back(k, t);
  }
  if (groups.empty()) throw std::invalid_argument("passive_relabel: no admissible scale");

  std::vector<std::size_t> wanted;
  for (const auto& g : groups) wanted.push_back(g.first);
  std::sort(wanted.begin(), wanted.end());
  const auto errs = prefix_majority_errors(pool, idx, wanted);

  double best_gb = std::numeric_limits<double>::infinity(), best_t = 0.0, best_eps = 0.0;
  for (const auto& [k, t] : groups) {
    const double eps = static_cast<double>(errs.at(k)) / static_cast<double>(m);
    const double v = gb(eps, k, delta, m, 1);
    if (v < best_gb || (v == best_gb && t < best_t)) {
      best_gb = v;
      best_t = t;
      best_eps = eps;
    }
  }
  return PassiveResult{best_t, ideal_majority_set(pool, idx, best_t), best_eps, best_gb, m};
}

PassiveResult passive_relabel(const LabeledPool& pool, double delta) {
  const FarthestFirstIndex idx = build_fft(pool.dataset(), 0);
  const auto scales = candidate_scales(idx, pool.dataset());
  return passive_relabel(pool, idx, scales, delta);
}

PassiveResult passive_separation_binary(const LabeledPool& pool, std::span<const double> scales, double delta) {
  if (pool.alphabet_size() > 2) throw std::domain_error("passive_separation_binary: binary labels required");
  if (!std::is_sorted(scales.begin(), scales.end()))
    throw std::invalid_argument("passive_separation_binary: scales must be ascending");
  const std::size_t m = pool.size();
  const Dataset& d = pool.dataset();

  BlockingMatchingSweep sweep(pool);
  PassiveResult best;
  best.gb_value = std::numeric_limits<double>::infinity();
  best.labels_used = m;
  for (double t : scales) {
    const std::size_t cover_size = sweep.advance(t);
    const double nu = static_cast<double>(cover_size) / static_cast<double>(m);
    if (nu >= best.gb_value) break;  // GB exceeds nu, and nu only grows

    const auto removed = min_blocking_cover(pool, t);
    std::vector<char> gone(m, 0);
    for (PointId p : removed) gone[p] = 1;
    std::vector<PointId> survivors;
    for (PointId p = 0; p < m; ++p)
      if (!gone[p]) survivors.push_back(p);
    const auto net = greedy_net(d, survivors, t);
    if (net.size() >= m) continue;

    const double v = gb(nu, net.size(), delta, m, 1);
    if (v < best.gb_value) {
      std::vector<CompressionEntry> entries;
      entries.reserve(net.size());
      for (PointId p : net) entries.push_back({p, pool.truth(p)});
      best.t_star = t;
      best.compression = CompressionSet(std::move(entries));
      best.gb_value = v;
    }
  }
  if (best.compression.empty()) throw std::invalid_argument("passive_separation_binary: no admissible scale");
  best.emp_error = empirical_error(NNClassifier(best.compression, pool.dataset_ptr()), pool);
  return best;
}

PassiveResult passive_separation_binary(const LabeledPool& pool, double delta) {
  const FarthestFirstIndex idx = build_fft(pool.dataset(), 0);
  const auto scales = candidate_scales(idx, pool.dataset());
  return passive_separation_binary(pool, scales, delta);
}

}  // namespace marmann
