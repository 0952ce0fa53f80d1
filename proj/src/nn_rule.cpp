#include "marmann/nn_rule.hpp"

#include "marmann/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace marmann {

CompressionSet::CompressionSet(std::vector<CompressionEntry> entries) : entries_(std::move(entries)) {
  std::vector<PointId> ids;
  ids.reserve(entries_.size());
  for (const auto& e : entries_) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("CompressionSet: duplicate point id");
}

NNClassifier::NNClassifier(CompressionSet cs, std::shared_ptr<const Dataset> data)
    : cs_(std::move(cs)), data_(std::move(data)) {
  if (cs_.empty()) throw std::invalid_argument("reconstruct: empty compression set");
  if (!data_) throw std::invalid_argument("reconstruct: null dataset");
  for (const auto& e : cs_.entries())
    if (e.id >= data_->size()) throw std::out_of_range("reconstruct: compression point out of range");
}

Label NNClassifier::predict(PointId id) const {
  if (id >= data_->size()) throw std::out_of_range("predict: point id out of range");
  const auto entries = cs_.entries();
  const Dataset& d = *data_;
  std::size_t best = 0;
  double best_d = d(id, entries[0].id);
  for (std::size_t k = 1; k < entries.size(); ++k) {
    const double r = d(id, entries[k].id);
    if (r < best_d) {
      best_d = r;
      best = k;
    }
  }
  return entries[best].label;
}

Label NNClassifier::predict(const Eigen::Ref<const Eigen::RowVectorXd>& x) const {
  const auto entries = cs_.entries();
  std::size_t best = 0;
  double best_d = data_->distance_to(x, entries[0].id);
  for (std::size_t k = 1; k < entries.size(); ++k) {
    const double r = data_->distance_to(x, entries[k].id);
    if (r < best_d) {
      best_d = r;
      best = k;
    }
  }
  return entries[best].label;
}

NNClassifier reconstruct(CompressionSet cs, std::shared_ptr<const Dataset> data) {
  return NNClassifier(std::move(cs), std::move(data));
}

double empirical_error(const NNClassifier& h, const LabeledPool& pool) {
  std::size_t wrong = 0;
  for (PointId p = 0; p < pool.size(); ++p) wrong += h.predict(p) != pool.truth(p);
  return static_cast<double>(wrong) / static_cast<double>(pool.size());
}

double sample_error(const NNClassifier& h, const Eigen::MatrixXd& points, std::span<const Label> labels) {
  if (labels.size() != static_cast<std::size_t>(points.rows()))
    throw std::invalid_argument("sample_error: label count does not match point count");
  if (labels.empty()) throw std::invalid_argument("sample_error: empty sample");
  std::size_t wrong = 0;
  for (Eigen::Index r = 0; r < points.rows(); ++r) wrong += h.predict(points.row(r)) != labels[static_cast<std::size_t>(r)];
  return static_cast<double>(wrong) / static_cast<double>(labels.size());
}

double nu_exact_binary(const LabeledPool& pool, double t) {
  if (pool.alphabet_size() > 2) throw std::domain_error("nu_exact_binary: binary labels required");
  return static_cast<double>(min_blocking_cover(pool, t).size()) / static_cast<double>(pool.size());
}

std::vector<Label> region_majorities(const LabeledPool& pool, const Partition& partition) {
  std::vector<Label> out(partition.size());
  std::vector<std::size_t> counts(pool.alphabet_size());
  for (std::size_t r = 0; r < partition.size(); ++r) {
    std::fill(counts.begin(), counts.end(), 0);
    for (PointId p : partition.regions[r]) ++counts[static_cast<std::size_t>(pool.truth(p))];
    out[r] = static_cast<Label>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  }
  return out;
}

NuBounds nu_bounds_multiclass(const LabeledPool& pool, const FarthestFirstIndex& idx, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("nu_bounds_multiclass: scale must be positive");
  const Partition part = partition_at(idx, pool.dataset(), t / 2.0);
  const auto majority = region_majorities(pool, part);
  std::size_t agreeing = 0;
  for (std::size_t r = 0; r < part.size(); ++r)
    for (PointId p : part.regions[r]) agreeing += pool.truth(p) == majority[r];
  const double m = static_cast<double>(pool.size());
  const auto pairs = blocking_pairs(pool, t);
  return NuBounds{1.0 - static_cast<double>(agreeing) / m,
                  2.0 * static_cast<double>(greedy_maximal_matching(pairs, pool.size())) / m};
}

CompressionSet ideal_majority_set(const LabeledPool& pool, const FarthestFirstIndex& idx, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("ideal_majority_set: scale must be positive");
  const NetView net = net_at(idx, t / 2.0);
  const Partition part = partition_for(pool.dataset(), net.points);
  const auto majority = region_majorities(pool, part);
  std::vector<CompressionEntry> entries;
  entries.reserve(net.size());
  for (std::size_t r = 0; r < net.size(); ++r) entries.push_back({net.points[r], majority[r]});
  return CompressionSet(std::move(entries));
}

}  // namespace marmann
