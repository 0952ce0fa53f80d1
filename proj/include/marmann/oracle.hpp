#pragma once

#include "marmann/metric.hpp"

#include <cstddef>
#include <memory>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace marmann {

using Rng = std::mt19937_64;

/// Audit trail of algorithmic label requests.
struct QueryLedger {
  std::vector<char> queried;  // queried[id] != 0 once id has been requested
  std::size_t total_requests = 0;
  std::size_t unique_queries = 0;

  bool operator==(const QueryLedger&) const = default;
};

/// The hidden labeled sample.  Algorithmic reads go through query_label and
/// are counted; evaluation reads (truth) bypass the ledger.
class LabeledPool {
 public:
  /// alphabet_size == 0 means max(label) + 1.  Requires |Y| <= m.
  LabeledPool(std::shared_ptr<const Dataset> data, std::vector<Label> labels, std::size_t alphabet_size = 0);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_; }
  const Dataset& dataset() const noexcept { return *data_; }
  const std::shared_ptr<const Dataset>& dataset_ptr() const noexcept { return data_; }

  Label query_label(PointId id);

  /// Evaluation-mode read: not counted.
  Label truth(PointId id) const { return labels_.at(id); }
  std::span<const Label> truth() const noexcept { return labels_; }

  const QueryLedger& ledger() const noexcept { return ledger_; }
  void reset_ledger();

 private:
  std::shared_ptr<const Dataset> data_;
  std::vector<Label> labels_;
  std::size_t alphabet_ = 0;
  QueryLedger ledger_;
};

/// Uniform i.i.d. draws with replacement from a region.
std::vector<PointId> sample_from_region(const LabeledPool& pool, std::span<const PointId> region,
                                        std::size_t count, Rng& rng);

/// Uniform draw of a pool point; its label is requested through the ledger.
std::pair<PointId, Label> sample_labeled_pair(LabeledPool& pool, Rng& rng);

}  // namespace marmann
