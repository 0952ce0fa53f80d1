#include "marmann/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace marmann {
namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::optional<double> to_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

long to_label(const std::string& s, std::size_t row) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::runtime_error("row " + std::to_string(row) + ": label '" + s + "' is not an integer");
  return v;
}

// Non-empty, non-comment rows.
std::vector<std::vector<std::string>> read_rows(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    rows.push_back(split_row(t));
  }
  return rows;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

PointFile parse_point_csv(std::istream& in, LabelColumn headerless) {
  auto rows = read_rows(in);
  if (rows.empty()) throw std::runtime_error("point file has no rows");

  bool header = false;
  for (std::size_t c = 1; c < rows.front().size(); ++c)
    if (!to_double(rows.front()[c])) header = true;

  std::optional<std::size_t> label_col;
  std::size_t ncols = rows.front().size();
  if (header) {
    for (std::size_t c = 0; c < ncols; ++c) {
      std::string name = rows.front()[c];
      std::transform(name.begin(), name.end(), name.begin(), ::tolower);
      if (name == "label") label_col = c;
    }
    rows.erase(rows.begin());
    if (rows.empty()) throw std::runtime_error("point file has a header but no points");
  } else if (headerless == LabelColumn::Last) {
    label_col = ncols - 1;
  }
  if (label_col && *label_col == 0) throw std::runtime_error("the first column must be the point id");

  const std::size_t dim = ncols - 1 - (label_col ? 1 : 0);
  PointFile pf;
  pf.coords.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dim));
  if (label_col) pf.labels.emplace();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != ncols)
      throw std::runtime_error("row " + std::to_string(r + 1) + ": expected " + std::to_string(ncols) +
                               " columns, found " + std::to_string(row.size()));
    pf.ids.push_back(row[0]);
    Eigen::Index k = 0;
    for (std::size_t c = 1; c < ncols; ++c) {
      if (label_col && c == *label_col) {
        pf.labels->push_back(to_label(row[c], r + 1));
        continue;
      }
      const auto v = to_double(row[c]);
      if (!v) throw std::runtime_error("row " + std::to_string(r + 1) + ": '" + row[c] + "' is not a number");
      pf.coords(static_cast<Eigen::Index>(r), k++) = *v;
    }
  }
  return pf;
}

PointFile read_point_csv(const std::filesystem::path& path, LabelColumn headerless) {
  auto in = open_or_throw(path);
  return parse_point_csv(in, headerless);
}

void write_point_csv(std::ostream& out, const Eigen::MatrixXd& coords, std::span<const long> labels) {
  const bool with_labels = !labels.empty();
  if (with_labels && labels.size() != static_cast<std::size_t>(coords.rows()))
    throw std::invalid_argument("label count does not match point count");
  out << "id";
  for (Eigen::Index c = 0; c < coords.cols(); ++c) out << ",x" << (c + 1);
  if (with_labels) out << ",label";
  out << '\n' << std::setprecision(17);
  for (Eigen::Index r = 0; r < coords.rows(); ++r) {
    out << r;
    for (Eigen::Index c = 0; c < coords.cols(); ++c) out << ',' << coords(r, c);
    if (with_labels) out << ',' << labels[static_cast<std::size_t>(r)];
    out << '\n';
  }
}

Eigen::MatrixXd parse_distance_matrix(std::istream& in) {
  const auto rows = read_rows(in);
  const auto m = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd table(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != m)
      throw std::runtime_error("distance matrix row " + std::to_string(i + 1) + " has " +
                               std::to_string(row.size()) + " entries, expected " + std::to_string(m));
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto v = to_double(row[static_cast<std::size_t>(j)]);
      if (!v) throw std::runtime_error("distance matrix entry is not a number: '" + row[static_cast<std::size_t>(j)] + "'");
      table(i, j) = *v;
    }
  }
  return table;
}

Eigen::MatrixXd read_distance_matrix(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_distance_matrix(in);
}

std::vector<long> read_label_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  auto rows = read_rows(in);
  if (!rows.empty() && !to_double(rows.front().back())) rows.erase(rows.begin());  // header
  std::vector<long> labels;
  labels.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) labels.push_back(to_label(rows[r].back(), r + 1));
  return labels;
}

EncodedLabels encode_labels(std::span<const long> raw) {
  EncodedLabels enc;
  enc.values.assign(raw.begin(), raw.end());
  std::sort(enc.values.begin(), enc.values.end());
  enc.values.erase(std::unique(enc.values.begin(), enc.values.end()), enc.values.end());
  enc.ids.reserve(raw.size());
  for (long v : raw) {
    const auto it = std::lower_bound(enc.values.begin(), enc.values.end(), v);
    enc.ids.push_back(static_cast<Label>(it - enc.values.begin()));
  }
  return enc;
}

}  // namespace marmann
