#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace marmann {

/// Index of a point in ingestion order; stable for the lifetime of a Dataset.
using PointId = std::size_t;
/// Dense label id in [0, |Y|).
using Label = int;

enum class Norm { L2, L1, Linf };

Norm parse_norm(std::string_view name);
std::string_view norm_name(Norm norm);

double point_distance(Norm norm, const Eigen::Ref<const Eigen::RowVectorXd>& a,
                      const Eigen::Ref<const Eigen::RowVectorXd>& b);

/// Immutable point set over a metric space.
///
/// Either built from coordinates (one row per point) with a built-in norm, or
/// from a precomputed distance matrix.  In both cases the full m x m distance
/// table is materialized at construction; all learners read distances from it.
/// The triangle inequality is trusted, not checked (see
/// find_triangle_violation for the optional O(m^3) audit).
class Dataset {
 public:
  static Dataset from_points(Eigen::MatrixXd points, Norm norm = Norm::L2);
  /// Validates a square, symmetric, non-negative table with zero diagonal.
  static Dataset from_distance_matrix(Eigen::MatrixXd table);

  std::size_t size() const noexcept { return static_cast<std::size_t>(table_.rows()); }

  /// Checked access; throws std::out_of_range for ids >= size().
  double distance(PointId i, PointId j) const;
  /// Unchecked access for hot loops.
  double operator()(PointId i, PointId j) const noexcept {
    return table_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  const Eigen::MatrixXd& table() const noexcept { return table_; }

  bool has_coordinates() const noexcept { return points_.rows() > 0; }
  const Eigen::MatrixXd& points() const noexcept { return points_; }
  Eigen::Index dimension() const noexcept { return points_.cols(); }
  Norm norm() const noexcept { return norm_; }

  /// Distance from an out-of-sample point to pool point j; needs coordinates.
  double distance_to(const Eigen::Ref<const Eigen::RowVectorXd>& x, PointId j) const;

 private:
  Dataset() = default;

  Eigen::MatrixXd points_;
  Eigen::MatrixXd table_;
  Norm norm_ = Norm::L2;
};

/// Sorted, strictly increasing positive distances of the upper triangle.
/// Deduplication uses exact floating-point equality.
std::vector<double> distinct_pairwise_distances(const Dataset& d);

double diameter(const Dataset& d);

/// Diameter of a subset of points.
double diameter(const Dataset& d, std::span<const PointId> subset);

struct TriangleViolation {
  PointId i, j, k;
  double excess;  // table(i,k) - table(i,j) - table(j,k)
};

/// O(m^3) scan for a triple with rho(i,k) > rho(i,j) + rho(j,k) + tol.
std::optional<TriangleViolation> find_triangle_violation(const Dataset& d, double tol = 1e-9);

}  // namespace marmann
