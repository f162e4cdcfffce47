#include "eollw/baseline.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "eollw/special.hpp"

namespace eollw {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double Baseline::density(double x) const { return std::exp(log_density(x)); }
double Baseline::cdf(double x) const { return std::exp(log_cdf(x)); }
double Baseline::survival(double x) const { return -std::expm1(log_cdf(x)); }

double Baseline::hazard(double x) const { return std::exp(log_hazard(x)); }

double Baseline::log_hazard(double x) const {
  return log_density(x) - log_survival(x);
}

bool Baseline::in_support(double x) const {
  return x > support_lower() && x < support_upper();
}

double Baseline::quantile_complement(double q) const { return quantile(1.0 - q); }

WeibullBaseline::WeibullBaseline(double shape, double scale)
    : shape_(shape), scale_(scale) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw std::invalid_argument("weibull shape must be a positive finite number");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("weibull scale must be a positive finite number");
  }
  log_scale_ = std::log(scale);
}

double WeibullBaseline::log_density(double x) const {
  if (!(x > 0.0)) return -kInf;
  const double lr = std::log(x) - log_scale_;  // log(x / lambda)
  const double w = std::exp(shape_ * lr);      // (x / lambda)^alpha
  return std::log(shape_) - log_scale_ + (shape_ - 1.0) * lr - w;
}

double WeibullBaseline::log_cdf(double x) const {
  if (!(x > 0.0)) return -kInf;
  return log_cdf_from_log_w(shape_ * (std::log(x) - log_scale_));
}

double WeibullBaseline::log_survival(double x) const {
  if (!(x > 0.0)) return 0.0;
  const double lw = shape_ * (std::log(x) - log_scale_);
  return -std::exp(lw < kMaxExpArg ? lw : kMaxExpArg);
}

double WeibullBaseline::quantile(double u) const {
  // -log(1-u) evaluated through log1p so u near 0 keeps full precision.
  return scale_ * std::pow(-std::log1p(-u), 1.0 / shape_);
}

double WeibullBaseline::quantile_complement(double q) const {
  return scale_ * std::pow(-std::log(q), 1.0 / shape_);
}

double WeibullBaseline::support_upper() const { return kInf; }

double GumbelMinBaseline::log_density(double x) const {
  // log g = x - exp(x).  Once exp(x) overflows the true value is below
  // -1e304, far outside the range exp() can see, so saturate honestly.
  if (x >= kMaxExpArg) return -kInf;
  return x - std::exp(x);
}

double GumbelMinBaseline::log_cdf(double x) const {
  return log_cdf_from_log_w(x);
}

double GumbelMinBaseline::log_survival(double x) const {
  if (x >= kMaxExpArg) return -kInf;
  return -std::exp(x);
}

double GumbelMinBaseline::quantile(double u) const {
  return std::log(-std::log1p(-u));
}

double GumbelMinBaseline::quantile_complement(double q) const {
  return std::log(-std::log(q));
}

double GumbelMinBaseline::support_lower() const { return -kInf; }
double GumbelMinBaseline::support_upper() const { return kInf; }

}  // namespace eollw
