#pragma once

#include "marmann/metric.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace marmann {

/// How to interpret the trailing column of a headerless point file.
enum class LabelColumn { Last, None };

/// Contents of a point CSV: `id,x1,...,xd[,label]`.
///
/// A header row is optional.  When present, the column named `label` (if any)
/// holds labels.  Without a header the last column is the label unless the
/// caller passes LabelColumn::None.
struct PointFile {
  std::vector<std::string> ids;
  Eigen::MatrixXd coords;
  std::optional<std::vector<long>> labels;
};

PointFile read_point_csv(const std::filesystem::path& path, LabelColumn headerless = LabelColumn::Last);
PointFile parse_point_csv(std::istream& in, LabelColumn headerless = LabelColumn::Last);

/// Writes a header row followed by one row per point.
void write_point_csv(std::ostream& out, const Eigen::MatrixXd& coords,
                     std::span<const long> labels = {});

/// m rows of m comma-separated reals; validated by Dataset::from_distance_matrix.
Eigen::MatrixXd read_distance_matrix(const std::filesystem::path& path);
Eigen::MatrixXd parse_distance_matrix(std::istream& in);

/// One label per row, either `label` or `id,label`.
std::vector<long> read_label_file(const std::filesystem::path& path);

/// Maps arbitrary integer labels onto dense ids, ordered by raw value.
struct EncodedLabels {
  std::vector<Label> ids;
  std::vector<long> values;  // values[id] is the raw label
};

EncodedLabels encode_labels(std::span<const long> raw);

}  // namespace marmann
