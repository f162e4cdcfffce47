#include "eollw/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace eollw {

double std_normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double std_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("std_normal_quantile: p must lie strictly inside (0, 1)");
  }
  static const boost::math::normal_distribution<double> norm;
  return boost::math::quantile(norm, p);
}

double chi_square_upper_tail(double w, double df) {
  if (!(df > 0.0)) throw std::domain_error("chi_square_upper_tail: df must be positive");
  if (!(w >= 0.0)) throw std::domain_error("chi_square_upper_tail: w must be nonnegative");
  return boost::math::gamma_q(0.5 * df, 0.5 * w);
}

double mean(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("mean: empty sample");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double variance(const std::vector<double>& v) {
  if (v.size() < 2) throw std::invalid_argument("variance: need at least 2 points");
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

namespace {
double central_moment(const std::vector<double>& v, int k, double m) {
  double s = 0.0;
  for (double x : v) s += std::pow(x - m, k);
  return s / static_cast<double>(v.size());
}
}  // namespace

double skewness(const std::vector<double>& v) {
  if (v.size() < 3) throw std::invalid_argument("skewness: need at least 3 points");
  const double m = mean(v);
  const double m2 = central_moment(v, 2, m);
  return central_moment(v, 3, m) / std::pow(m2, 1.5);
}

double kurtosis(const std::vector<double>& v) {
  if (v.size() < 4) throw std::invalid_argument("kurtosis: need at least 4 points");
  const double m = mean(v);
  const double m2 = central_moment(v, 2, m);
  return central_moment(v, 4, m) / (m2 * m2);
}

double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile_sorted: empty sample");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("quantile_sorted: p must lie in [0, 1]");
  }
  const double idx = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(idx));
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = idx - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    const double hi = (static_cast<double>(i) + 1.0) / n - f;
    const double lo = f - static_cast<double>(i) / n;
    d = std::max({d, hi, lo});
  }
  return d;
}

}  // namespace eollw
