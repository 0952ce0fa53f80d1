#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace marmann {

/// Inputs of the compression generalization bound.
template <class Scalar>
struct BoundParams {
  Scalar epsilon;       // empirical error in [0, 1]
  std::size_t N;        // compression size, N < m
  Scalar delta;         // confidence in (0, 1)
  std::size_t m;        // sample size
  std::size_t k = 1;    // side-information alphabet size
};

/// Compression bound with side information:
///   a*eps + (2/3)*L/(m-N) + (3/sqrt 2)*sqrt(a*eps*L/(m-N)),
/// with a = m/(m-N) and L = (N+1) ln(m k) + ln(1/delta).
template <class Scalar>
Scalar gb(const BoundParams<Scalar>& p) {
  using std::log;
  using std::sqrt;
  if (p.N >= p.m) throw std::invalid_argument("gb: compression size must be smaller than m");
  if (p.k < 1) throw std::invalid_argument("gb: alphabet size must be at least 1");
  const Scalar m = static_cast<Scalar>(p.m);
  const Scalar rest = m - static_cast<Scalar>(p.N);
  const Scalar alpha = m / rest;
  const Scalar complexity =
      (static_cast<Scalar>(p.N) + 1) * log(m * static_cast<Scalar>(p.k)) + log(Scalar(1) / p.delta);
  return alpha * p.epsilon + Scalar(2) / 3 * complexity / rest +
         Scalar(3) / sqrt(Scalar(2)) * sqrt(alpha * p.epsilon * complexity / rest);
}

template <class Scalar>
Scalar gb(Scalar epsilon, std::size_t N, Scalar delta, std::size_t m, std::size_t k = 1) {
  return gb(BoundParams<Scalar>{epsilon, N, delta, m, k});
}

/// phi(t) = ((N(t)+1) ln m + ln(1/delta)) / m.
template <class Scalar>
Scalar phi(std::size_t net_size, std::size_t m, Scalar delta) {
  using std::log;
  const Scalar mm = static_cast<Scalar>(m);
  return ((static_cast<Scalar>(net_size) + 1) * log(mm) + log(Scalar(1) / delta)) / mm;
}

/// G(eps, t) = eps + (2/3) phi + (3/sqrt 2) sqrt(eps phi).
template <class Scalar>
Scalar g_value(Scalar eps, Scalar phi_t) {
  using std::sqrt;
  return eps + Scalar(2) / 3 * phi_t + Scalar(3) / sqrt(Scalar(2)) * sqrt(eps * phi_t);
}

/// eps >= c*phi implies gamma(c)*eps >= G(eps).
template <class Scalar>
Scalar gamma_c(Scalar c) {
  using std::sqrt;
  return 1 + Scalar(2) / (3 * c) + Scalar(3) / sqrt(2 * c);
}

/// phi >= c*eps implies gamma_tilde(c)*phi >= G(eps).
template <class Scalar>
Scalar gamma_tilde_c(Scalar c) {
  using std::sqrt;
  return 1 / c + Scalar(2) / 3 + Scalar(3) / sqrt(2 * c);
}

}  // namespace marmann
