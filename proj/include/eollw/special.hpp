#pragma once

// Small numerically-careful primitives used throughout the library.
// Everything here is branch-for-stability: the branch cutoffs follow the
// usual accuracy crossovers for the expm1/log1p pairs.

#include <cmath>
#include <limits>

namespace eollw {

// Largest argument we ever hand to exp(); beyond this exp overflows double.
inline constexpr double kMaxExpArg = 700.0;

// log(1 - exp(u)) for u <= 0. Splits at -log(2): below it 1-exp(u) is far
// from 0 and log1p(-exp(u)) is exact; above it expm1 keeps the cancellation
// in the exp, not the log.
inline double log1mexp(double u) {
  if (u > 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (u == 0.0) return -std::numeric_limits<double>::infinity();
  static const double kLog2 = 0.6931471805599453;
  if (u > -kLog2) return std::log(-std::expm1(u));
  return std::log1p(-std::exp(u));
}

// log(1 + exp(x)) without overflow for large x or wasted precision for
// very negative x.
inline double log1pexp(double x) {
  if (x > 33.3) return x;                 // 1 is below double epsilon of exp(x)
  if (x > -37.0) return std::log1p(std::exp(x));
  return std::exp(x);                     // log1p(eps) == eps at this scale
}

// log(exp(x) - 1) for x > 0; the reflection of log1pexp.
inline double logexpm1(double x) {
  if (x > 33.3) return x;
  if (x > 1e-10) return std::log(std::expm1(x));
  return std::log(x) + 0.5 * x;           // expm1(x) ~ x * (1 + x/2)
}

// log(exp(x) + exp(y)) evaluated from the larger argument.
inline double logsumexp2(double x, double y) {
  if (x == -std::numeric_limits<double>::infinity()) return y;
  if (y == -std::numeric_limits<double>::infinity()) return x;
  const double m = x > y ? x : y;
  return m + log1pexp(-std::fabs(x - y));
}

// Logistic function 1 / (1 + exp(-x)); exact in both tails.
inline double expit(double x) {
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// log G given log w, where G = 1 - exp(-w) and w = exp(log_w). Shared by the
// Weibull baseline (log_w = alpha*(log x - log lambda)) and the extreme-value
// baseline (log_w = z). Stays finite even when w itself underflows: in that
// regime G ~ w*(1 - w/2) so log G ~ log_w.
inline double log_cdf_from_log_w(double log_w) {
  if (log_w < -37.0) {
    return log_w + std::log1p(-0.5 * std::exp(log_w));
  }
  const double w = std::exp(log_w < kMaxExpArg ? log_w : kMaxExpArg);
  return log1mexp(-w);
}

}  // namespace eollw
