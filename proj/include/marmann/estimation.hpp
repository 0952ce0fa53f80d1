#pragma once

#include "marmann/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace marmann {

struct EstBerConfig {
  double theta = 0.0;  // threshold
  double beta = 7.0;   // budget, >= 7
  double delta = 0.0;  // confidence in (0, 1)

  void validate() const {
    if (!(theta > 0.0)) throw std::invalid_argument("est_ber: theta must be positive");
    if (!(beta >= 7.0)) throw std::invalid_argument("est_ber: beta must be at least 7");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("est_ber: delta must lie in (0, 1)");
  }
};

struct EstimateOutcome {
  double p_hat = 0.0;
  std::size_t draws = 0;
  std::size_t rounds = 0;  // doubling rounds after the initial four draws
};

/// K = (4 beta / theta) ln(8 beta / (delta theta)).
inline double est_ber_cap(const EstBerConfig& c) {
  return 4.0 * c.beta / c.theta * std::log(8.0 * c.beta / (c.delta * c.theta));
}

/// Index of the last doubling round, ceil(log2(beta ln(2K/delta) / theta)).
inline int est_ber_last_round(const EstBerConfig& c) {
  const double x = c.beta * std::log(2.0 * est_ber_cap(c) / c.delta) / c.theta;
  return static_cast<int>(std::ceil(std::log2(x)));
}

/// f(beta) = 1 + 8/(3 beta) + sqrt(2/beta).
inline double est_ber_f(double beta) { return 1.0 + 8.0 / (3.0 * beta) + std::sqrt(2.0 / beta); }

/// Worst-case number of draws for true mean p: 8 beta ln(8 beta/(delta psi)) / psi,
/// psi = max(theta, p / f(beta)).
inline double est_ber_draw_bound(const EstBerConfig& c, double p) {
  const double psi = std::max(c.theta, p / est_ber_f(c.beta));
  return 8.0 * c.beta * std::log(8.0 * c.beta / (c.delta * psi)) / psi;
}

/// Adaptive Bernoulli mean estimate.  `draw()` yields one {0,1} sample (any
/// value convertible to bool).  Four seed draws, then doubling rounds
/// n = 8, 16, ... that stop once p_hat_n > beta ln(2n/delta) / n.
template <class Draw>
EstimateOutcome est_ber(Draw&& draw, const EstBerConfig& cfg) {
  cfg.validate();
  const int last = est_ber_last_round(cfg);
  if (last > 62) throw std::invalid_argument("est_ber: theta too small for the round schedule");

  std::size_t ones = 0, n = 0;
  for (; n < 4; ++n) ones += draw() ? 1 : 0;
  EstimateOutcome out{static_cast<double>(ones) / 4.0, n, 0};

  for (int i = 3; i <= last; ++i) {
    const std::size_t target = std::size_t{1} << i;
    for (; n < target; ++n) ones += draw() ? 1 : 0;
    const double nn = static_cast<double>(n);
    out = {static_cast<double>(ones) / nn, n, out.rounds + 1};
    if (out.p_hat > cfg.beta * std::log(2.0 * nn / cfg.delta) / nn) break;
  }
  if (static_cast<double>(out.draws) > est_ber_cap(cfg))
    throw std::logic_error("est_ber: draw count exceeded K");
  return out;
}

/// Active estimate of the error of the relabeled t/2 net: est_ber with
/// beta = 52 and confidence delta/(2 m^2); each draw costs one pool label
/// plus the (memoized) vote of the drawn point's region.
EstimateOutcome estimate_err(MarmannState& state, double t, double theta);

}  // namespace marmann
