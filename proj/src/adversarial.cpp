#include "marmann/adversarial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace marmann {

void AdversarialParams::validate() const {
  if (d < 2) throw std::invalid_argument("adversarial: support size d must be at least 2");
  if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("adversarial: b must lie in [0, 1]");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("adversarial: p must lie in (0, 1)");
  if (sigma.size() != d - 1) throw std::invalid_argument("adversarial: sigma needs d-1 entries");
  for (int s : sigma)
    if (s != 1 && s != -1) throw std::invalid_argument("adversarial: sigma entries must be +-1");
  if (eta && bayes_error() > *eta) throw std::invalid_argument("adversarial: p(1/2 - b/2) exceeds the declared eta");
}

DiscreteSample sample_adversarial(const AdversarialParams& params, std::size_t n, Rng& rng) {
  params.validate();
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> light(0, params.d - 2);
  DiscreteSample s;
  s.x.reserve(n);
  s.y.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (unif(rng) >= params.p) {
      s.x.push_back(params.d - 1);
      s.y.push_back(1);
    } else {
      const std::size_t j = light(rng);
      const double p_plus = 0.5 + params.b * params.sigma[j] / 2.0;
      s.x.push_back(j);
      s.y.push_back(unif(rng) < p_plus ? 1 : -1);
    }
  }
  return s;
}

namespace {

// e * ln(base) with the convention 0 * ln(0) = 0.
double log_pow(double base, std::size_t e) {
  return e == 0 ? 0.0 : static_cast<double>(e) * std::log(base);
}

}  // namespace

double bayes_fn(std::size_t k, double b) {
  if (k > 10000) throw std::invalid_argument("bayes: k too large for exact summation");
  if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("bayes: b must lie in [0, 1]");
  const double hi = (1.0 + b) / 2.0, lo = (1.0 - b) / 2.0;
  const double kk = static_cast<double>(k);
  // 1/2 (1 - 1/2 |P - Q|_1) = 1/2 sum min(p, q); the latter avoids cancellation
  double overlap = 0.0;
  for (std::size_t j = 0; j <= k; ++j) {
    const double jj = static_cast<double>(j);
    const double log_binom = std::lgamma(kk + 1) - std::lgamma(jj + 1) - std::lgamma(kk - jj + 1);
    const double pj = std::exp(log_binom + log_pow(hi, j) + log_pow(lo, k - j));
    const double qj = std::exp(log_binom + log_pow(lo, j) + log_pow(hi, k - j));
    overlap += std::min(pj, qj);
  }
  return 0.5 * overlap;
}

double bayes_check_fn(double kappa, double b) {
  if (!(kappa >= 0.0)) throw std::invalid_argument("bayes_check: kappa must be non-negative");
  if (kappa < 1.0) return 0.5 * (1.0 - kappa * b);
  const auto k1 = static_cast<std::size_t>(2.0 * std::floor((kappa - 1.0) / 2.0) + 1.0);
  const double w = (kappa - static_cast<double>(k1)) / 2.0;
  if (w == 0.0) return bayes_fn(k1, b);
  return (1.0 - w) * bayes_fn(k1, b) + w * bayes_fn(k1 + 2, b);
}

double minority_count_nu(const DiscreteSample& s) {
  if (s.size() == 0) return 0.0;
  std::size_t support = 0;
  for (std::size_t x : s.x) support = std::max(support, x + 1);
  std::vector<std::size_t> plus(support, 0), minus(support, 0);
  for (std::size_t i = 0; i < s.size(); ++i) (s.y[i] > 0 ? plus : minus)[s.x[i]]++;
  std::size_t minority = 0;
  for (std::size_t j = 0; j < support; ++j) minority += std::min(plus[j], minus[j]);
  return static_cast<double>(minority) / static_cast<double>(s.size());
}

void UniformNoisyParams::validate() const {
  if (N < 1) throw std::invalid_argument("uniform-noisy: support size must be positive");
  if (!(beta >= 0.0 && beta < 0.5)) throw std::invalid_argument("uniform-noisy: beta must lie in [0, 1/2)");
  if (!majority.empty() && majority.size() != N) throw std::invalid_argument("uniform-noisy: majority needs N entries");
}

int UniformNoisyParams::majority_of(std::size_t x) const {
  if (!majority.empty()) return majority[x];
  return x % 2 == 0 ? 1 : -1;
}

DiscreteSample sample_uniform_noisy(const UniformNoisyParams& params, std::size_t n, Rng& rng) {
  params.validate();
  std::uniform_int_distribution<std::size_t> pick(0, params.N - 1);
  std::bernoulli_distribution flip(params.beta);
  DiscreteSample s;
  s.x.reserve(n);
  s.y.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t x = pick(rng);
    const int y = params.majority_of(x);
    s.x.push_back(x);
    s.y.push_back(flip(rng) ? -y : y);
  }
  return s;
}

MinorityEstimate expected_minority_bounds(const UniformNoisyParams& params, std::size_t m, std::size_t trials, Rng& rng) {
  params.validate();
  if (trials < 100) throw std::invalid_argument("expected_minority_bounds: at least 100 trials required");
  const double N = static_cast<double>(params.N), mm = static_cast<double>(m);
  const double v = 2.0 * params.beta * (1.0 - params.beta);
  MinorityEstimate est;
  est.trials = trials;
  est.lower = v * std::max(0.0, mm - N);
  est.upper = v * mm;
  est.exact = v * (mm - N * (1.0 - std::pow(1.0 - 1.0 / N, mm)));

  std::vector<std::size_t> n(params.N), plus(params.N);
  double total = 0.0;
  for (std::size_t r = 0; r < trials; ++r) {
    const DiscreteSample s = sample_uniform_noisy(params, m, rng);
    std::fill(n.begin(), n.end(), 0);
    std::fill(plus.begin(), plus.end(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      ++n[s.x[i]];
      plus[s.x[i]] += s.y[i] > 0;
    }
    double sum = 0.0;
    for (std::size_t x = 0; x < params.N; ++x)
      if (n[x] > 0) sum += 2.0 * static_cast<double>(plus[x]) * static_cast<double>(n[x] - plus[x]) / static_cast<double>(n[x]);
    total += sum;
  }
  est.mean = total / static_cast<double>(trials);
  return est;
}

LabeledPool embed_on_line(const DiscreteSample& s) {
  Eigen::MatrixXd pts(static_cast<Eigen::Index>(s.size()), 1);
  std::vector<Label> labels(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    pts(static_cast<Eigen::Index>(i), 0) = static_cast<double>(s.x[i]);
    labels[i] = s.y[i] > 0 ? 1 : 0;
  }
  auto data = std::make_shared<const Dataset>(Dataset::from_points(pts, Norm::L2));
  return LabeledPool(std::move(data), std::move(labels), 2);
}

}  // namespace marmann
