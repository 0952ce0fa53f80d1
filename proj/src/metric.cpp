#include "marmann/metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace marmann {

Norm parse_norm(std::string_view name) {
  if (name == "l2") return Norm::L2;
  if (name == "l1") return Norm::L1;
  if (name == "linf") return Norm::Linf;
  throw std::invalid_argument("unknown norm '" + std::string(name) + "' (expected l2, l1 or linf)");
}

std::string_view norm_name(Norm norm) {
  switch (norm) {
    case Norm::L2: return "l2";
    case Norm::L1: return "l1";
    case Norm::Linf: return "linf";
  }
  return "l2";
}

double point_distance(Norm norm, const Eigen::Ref<const Eigen::RowVectorXd>& a,
                      const Eigen::Ref<const Eigen::RowVectorXd>& b) {
  switch (norm) {
    case Norm::L2: return (a - b).norm();
    case Norm::L1: return (a - b).lpNorm<1>();
    case Norm::Linf: return (a - b).lpNorm<Eigen::Infinity>();
  }
  return (a - b).norm();
}

Dataset Dataset::from_points(Eigen::MatrixXd points, Norm norm) {
  if (points.rows() == 0) throw std::invalid_argument("dataset must contain at least one point");
  if (!points.allFinite()) throw std::invalid_argument("point coordinates must be finite");
  Dataset d;
  d.norm_ = norm;
  const Eigen::Index m = points.rows();
  d.table_ = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = j + 1; i < m; ++i) {
      const double r = point_distance(norm, points.row(i), points.row(j));
      d.table_(i, j) = r;
      d.table_(j, i) = r;
    }
  }
  d.points_ = std::move(points);
  return d;
}

Dataset Dataset::from_distance_matrix(Eigen::MatrixXd table) {
  if (table.rows() == 0) throw std::invalid_argument("distance matrix is empty");
  if (table.rows() != table.cols()) throw std::invalid_argument("distance matrix must be square");
  const Eigen::Index m = table.rows();
  for (Eigen::Index i = 0; i < m; ++i) {
    if (table(i, i) != 0.0) throw std::invalid_argument("distance matrix must have a zero diagonal");
    for (Eigen::Index j = 0; j < m; ++j) {
      const double r = table(i, j);
      if (!std::isfinite(r) || r < 0.0)
        throw std::invalid_argument("distance matrix entries must be finite and non-negative");
      if (r != table(j, i)) throw std::invalid_argument("distance matrix must be symmetric");
    }
  }
  Dataset d;
  d.table_ = std::move(table);
  return d;
}

double Dataset::distance(PointId i, PointId j) const {
  if (i >= size() || j >= size()) throw std::out_of_range("point id out of range");
  return (*this)(i, j);
}

double Dataset::distance_to(const Eigen::Ref<const Eigen::RowVectorXd>& x, PointId j) const {
  if (!has_coordinates())
    throw std::logic_error("out-of-sample distances need a coordinate-backed dataset");
  return point_distance(norm_, x, points_.row(static_cast<Eigen::Index>(j)));
}

std::vector<double> distinct_pairwise_distances(const Dataset& d) {
  const std::size_t m = d.size();
  std::vector<double> out;
  if (m < 2) return out;
  out.reserve(m * (m - 1) / 2);
  for (PointId j = 0; j < m; ++j)
    for (PointId i = j + 1; i < m; ++i)
      if (d(i, j) > 0.0) out.push_back(d(i, j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double diameter(const Dataset& d) { return d.table().maxCoeff(); }

double diameter(const Dataset& d, std::span<const PointId> subset) {
  double best = 0.0;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b) best = std::max(best, d(subset[a], subset[b]));
  return best;
}

std::optional<TriangleViolation> find_triangle_violation(const Dataset& d, double tol) {
  const std::size_t m = d.size();
  for (PointId i = 0; i < m; ++i)
    for (PointId j = 0; j < m; ++j)
      for (PointId k = 0; k < m; ++k) {
        const double excess = d(i, k) - d(i, j) - d(j, k);
        if (excess > tol) return TriangleViolation{i, j, k, excess};
      }
  return std::nullopt;
}

}  // namespace marmann
