#pragma once

// Scalar statistics helpers shared by tests, diagnostics and the Monte
// Carlo harness: normal cdf/quantile, chi-square tail, sample moments,
// empirical quantiles and the Kolmogorov-Smirnov statistic.

#include <cstddef>
#include <functional>
#include <vector>

namespace eollw {

double std_normal_cdf(double x);

// Inverse standard normal cdf, 0 < p < 1 (std::domain_error otherwise).
double std_normal_quantile(double p);

// P(X > w) for X chi-square with df degrees of freedom; w >= 0, df > 0.
double chi_square_upper_tail(double w, double df);

double mean(const std::vector<double>& v);
double variance(const std::vector<double>& v);  // denominator n - 1

// Standardized third moment (n denominator), biased-but-simple convention.
double skewness(const std::vector<double>& v);
// Standardized fourth moment, not excess.
double kurtosis(const std::vector<double>& v);

// Linear-interpolation sample quantile on sorted data, p in [0, 1].
double quantile_sorted(const std::vector<double>& sorted, double p);

// Two-sided KS statistic of a sample against a cdf.
double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf);

}  // namespace eollw
