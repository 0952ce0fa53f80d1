#pragma once

#include "marmann/oracle.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace marmann {

/// Support {0, ..., d-1}: point d-1 is heavy (mass 1-p, label always +1);
/// each light point j < d-1 has mass p/(d-1) and label +1 with probability
/// 1/2 + b sigma_j / 2.
struct AdversarialParams {
  std::size_t d = 2;
  double b = 0.0;
  double p = 0.5;
  std::vector<int> sigma;       // d-1 entries in {-1, +1}
  std::optional<double> eta;    // declared noise bound: p (1/2 - b/2) <= eta

  void validate() const;
  /// Bayes error of the distribution, p (1/2 - b/2).
  double bayes_error() const { return p * (0.5 - b / 2.0); }
};

/// Support index and +-1 label per draw.
struct DiscreteSample {
  std::vector<std::size_t> x;
  std::vector<int> y;

  std::size_t size() const noexcept { return x.size(); }
};

DiscreteSample sample_adversarial(const AdversarialParams& params, std::size_t n, Rng& rng);

/// bayes(k, b) = (1/2)(1 - (1/2) ||Rad_b^k - Rad_{-b}^k||_1), exact over the
/// k+1 head-count classes.  Requires k <= 10^4 and b in [0, 1].
double bayes_fn(std::size_t k, double b);

/// Piecewise-linear interpolation of bayes(., b) at knots 0, 1, 3, 5, ...
double bayes_check_fn(double kappa, double b);

/// (1/l) * sum over support points of min(#(+1), #(-1)).
double minority_count_nu(const DiscreteSample& s);

/// Uniform marginal over N support points; P[Y=1 | x] is beta or 1-beta.
struct UniformNoisyParams {
  std::size_t N = 1;
  double beta = 0.0;             // in [0, 1/2)
  std::vector<int> majority;     // per-point majority label (+-1); empty = alternate starting at +1

  void validate() const;
  int majority_of(std::size_t x) const;
};

DiscreteSample sample_uniform_noisy(const UniformNoisyParams& params, std::size_t n, Rng& rng);

struct MinorityEstimate {
  double mean = 0.0;    // Monte Carlo mean of sum_x 2 n_x p+(1 - p+)
  double lower = 0.0;   // 2 beta (1-beta) (m - N)
  double upper = 0.0;   // 2 beta (1-beta) m
  double exact = 0.0;   // 2 beta (1-beta) (m - E[#occupied support points])
  std::size_t trials = 0;
};

MinorityEstimate expected_minority_bounds(const UniformNoisyParams& params, std::size_t m, std::size_t trials, Rng& rng);

/// Embeds a discrete sample on the line (support point j at coordinate j)
/// as a binary pool: label +1 -> 1, -1 -> 0.
LabeledPool embed_on_line(const DiscreteSample& s);

}  // namespace marmann
