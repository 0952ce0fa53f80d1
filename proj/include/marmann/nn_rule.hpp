#pragma once

#include "marmann/metric.hpp"
#include "marmann/net.hpp"
#include "marmann/oracle.hpp"

#include <Eigen/Dense>

#include <memory>
#include <span>
#include <vector>

namespace marmann {

struct CompressionEntry {
  PointId id;
  Label label;  // may differ from the pool label (side information)

  bool operator==(const CompressionEntry&) const = default;
};

/// Ordered (point, label) pairs; point ids are distinct.
class CompressionSet {
 public:
  CompressionSet() = default;
  explicit CompressionSet(std::vector<CompressionEntry> entries);

  std::span<const CompressionEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  bool operator==(const CompressionSet&) const = default;

 private:
  std::vector<CompressionEntry> entries_;
};

/// 1-NN rule over a compression set; distance ties go to the earliest entry.
class NNClassifier {
 public:
  NNClassifier(CompressionSet cs, std::shared_ptr<const Dataset> data);

  Label predict(PointId id) const;
  /// Out-of-sample prediction; needs a coordinate-backed dataset.
  Label predict(const Eigen::Ref<const Eigen::RowVectorXd>& x) const;

  const CompressionSet& compression() const noexcept { return cs_; }
  const Dataset& dataset() const noexcept { return *data_; }

 private:
  CompressionSet cs_;
  std::shared_ptr<const Dataset> data_;
};

NNClassifier reconstruct(CompressionSet cs, std::shared_ptr<const Dataset> data);

/// Fraction of pool points misclassified (evaluation mode, not counted).
double empirical_error(const NNClassifier& h, const LabeledPool& pool);

/// Fraction of rows of `points` whose label differs from the prediction.
double sample_error(const NNClassifier& h, const Eigen::MatrixXd& points, std::span<const Label> labels);

/// Exact nu(t) for a binary pool: minimum vertex cover of the t-blocking
/// graph divided by m.  Throws std::domain_error for |Y| > 2.
double nu_exact_binary(const LabeledPool& pool, double t);

struct NuBounds {
  double lower;
  double upper;
};

/// lower: 1 - (1/m) sum_i |Lambda_i| over the regions of the t/2 net.
/// upper: 2 * (greedy maximal matching of the blocking graph) / m.
NuBounds nu_bounds_multiclass(const LabeledPool& pool, const FarthestFirstIndex& idx, double t);

/// Majority label of each region of `partition` under the hidden labels;
/// ties go to the smallest label id.
std::vector<Label> region_majorities(const LabeledPool& pool, const Partition& partition);

/// Net points of the t/2 net labeled by their region's true majority.
CompressionSet ideal_majority_set(const LabeledPool& pool, const FarthestFirstIndex& idx, double t);

}  // namespace marmann
