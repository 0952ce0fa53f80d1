#include "marmann/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace marmann {

LabeledPool::LabeledPool(std::shared_ptr<const Dataset> data, std::vector<Label> labels, std::size_t alphabet_size)
    : data_(std::move(data)), labels_(std::move(labels)) {
  if (!data_) throw std::invalid_argument("LabeledPool: null dataset");
  if (labels_.size() != data_->size()) throw std::invalid_argument("LabeledPool: one label per point is required");
  if (labels_.empty()) throw std::invalid_argument("LabeledPool: empty pool");
  const Label lo = *std::min_element(labels_.begin(), labels_.end());
  const Label hi = *std::max_element(labels_.begin(), labels_.end());
  if (lo < 0) throw std::invalid_argument("LabeledPool: labels must be dense non-negative ids");
  alphabet_ = alphabet_size == 0 ? static_cast<std::size_t>(hi) + 1 : alphabet_size;
  if (static_cast<std::size_t>(hi) >= alphabet_) throw std::invalid_argument("LabeledPool: label outside the alphabet");
  if (alphabet_ > labels_.size()) throw std::invalid_argument("LabeledPool: alphabet larger than the pool");
  ledger_.queried.assign(labels_.size(), 0);
}

Label LabeledPool::query_label(PointId id) {
  if (id >= labels_.size()) throw std::out_of_range("query_label: point id out of range");
  ++ledger_.total_requests;
  if (!ledger_.queried[id]) {
    ledger_.queried[id] = 1;
    ++ledger_.unique_queries;
  }
  return labels_[id];
}

void LabeledPool::reset_ledger() {
  ledger_ = QueryLedger{};
  ledger_.queried.assign(labels_.size(), 0);
}

std::vector<PointId> sample_from_region(const LabeledPool& pool, std::span<const PointId> region,
                                        std::size_t count, Rng& rng) {
  if (region.empty()) throw std::invalid_argument("sample_from_region: empty region");
  if (count == 0) throw std::invalid_argument("sample_from_region: count must be positive");
  for (PointId p : region)
    if (p >= pool.size()) throw std::out_of_range("sample_from_region: point id out of range");
  std::uniform_int_distribution<std::size_t> pick(0, region.size() - 1);
  std::vector<PointId> out(count);
  for (auto& p : out) p = region[pick(rng)];
  return out;
}

std::pair<PointId, Label> sample_labeled_pair(LabeledPool& pool, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const PointId id = pick(rng);
  return {id, pool.query_label(id)};
}

}  // namespace marmann
