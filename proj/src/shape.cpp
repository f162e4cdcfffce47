#include "eollw/shape.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "eollw/special.hpp"

namespace eollw {

namespace {

constexpr double kScanLo = 1e-10;
constexpr double kScanHi = 1e4;
constexpr int kScanPoints = 4096;
constexpr double kBisectRelTol = 1e-12;

// Sign-change scan on a log-spaced grid over [kScanLo, kScanHi], then
// bisection of each bracket down to relative width kBisectRelTol.
std::vector<double> scan_roots(const std::function<double(double)>& f) {
  std::vector<double> roots;
  const double log_lo = std::log(kScanLo);
  const double step = (std::log(kScanHi) - log_lo) / (kScanPoints - 1);
  double prev_x = kScanLo;
  double prev_f = f(prev_x);
  for (int i = 1; i < kScanPoints; ++i) {
    const double x = std::exp(log_lo + i * step);
    const double fx = f(x);
    if (prev_f == 0.0) {
      roots.push_back(prev_x);
    } else if ((prev_f < 0.0) != (fx < 0.0) && fx != 0.0) {
      double lo = prev_x, hi = x, flo = prev_f;
      while (hi - lo > kBisectRelTol * hi) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_f = fx;
  }
  return roots;
}

bool nearly_integer(double a) { return std::fabs(a - std::round(a)) < 1e-12; }

// Relation of a*b to 1/alpha decides the density limit at the origin:
// divergence below, a finite positive value at equality, zero above.
enum class OriginLimit { kInfinite, kFinite, kZero };

OriginLimit origin_limit(const EollwParams& p) {
  const double q = p.a * p.b * p.alpha;
  if (std::fabs(q - 1.0) < 1e-12) return OriginLimit::kFinite;
  return q < 1.0 ? OriginLimit::kInfinite : OriginLimit::kZero;
}

}  // namespace

std::string to_string(DensityClass c) {
  switch (c) {
    case DensityClass::kDecreasing: return "decreasing";
    case DensityClass::kUnimodal: return "unimodal";
    case DensityClass::kDecIncDec: return "dec-inc-dec";
    case DensityClass::kBimodal: return "bimodal";
    case DensityClass::kIndeterminate: return "indeterminate";
  }
  return "indeterminate";
}

std::string to_string(HazardClass c) {
  switch (c) {
    case HazardClass::kIncreasing: return "increasing";
    case HazardClass::kDecreasing: return "decreasing";
    case HazardClass::kBathtub: return "bathtub";
    case HazardClass::kUnimodal: return "unimodal";
    case HazardClass::kIndeterminate: return "indeterminate";
  }
  return "indeterminate";
}

std::string to_string(TailClass c) {
  switch (c) {
    case TailClass::kUpperHeavy: return "upper-heavy";
    case TailClass::kBoundary: return "boundary";
    case TailClass::kUpperLight: return "upper-light";
  }
  return "boundary";
}

double crit_baseline_side(double omega, double alpha) {
  if (!(omega > 0.0)) throw std::domain_error("crit_baseline_side: omega must be positive");
  return (1.0 - (1.0 - alpha) / (alpha * omega)) * (-std::expm1(-omega));
}

double crit_shape_side(double omega, double a, double b) {
  if (!(omega > 0.0)) throw std::domain_error("crit_shape_side: omega must be positive");
  // 1 + a*(E - b)/(E + 1) with E = (exp(omega) - 1)^a, rewritten so E is
  // never formed: the last factor is 1/(E + 1) = expit(-a*logexpm1(omega)).
  return 1.0 + a - a * (1.0 + b) * expit(-a * logexpm1(omega));
}

double crit_logtime_side(double omega) {
  if (!(omega > 0.0)) throw std::domain_error("crit_logtime_side: omega must be positive");
  return (1.0 / omega + 1.0) * (-std::expm1(-omega));
}

double crit_logtime_side_maximizer() {
  // Golden-section search; the function is unimodal on this bracket.
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.5, hi = 5.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = crit_logtime_side(x1), f2 = crit_logtime_side(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = crit_logtime_side(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = crit_logtime_side(x1);
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> density_critical_points(const EollwParams& p) {
  p.validate();
  const auto omega_roots = scan_roots([&](double omega) {
    return crit_baseline_side(omega, p.alpha) - crit_shape_side(omega, p.a, p.b);
  });
  std::vector<double> pts;
  pts.reserve(omega_roots.size());
  for (double omega : omega_roots) {
    pts.push_back(p.lambda * std::pow(omega, 1.0 / p.alpha));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<double> leollw_critical_points(double a, double b) {
  EollwParams{a, b, 1.0, 1.0}.validate();
  auto roots = scan_roots([&](double omega) {
    return crit_logtime_side(omega) - crit_shape_side(omega, a, b);
  });
  for (double& r : roots) r = std::log(r);
  std::sort(roots.begin(), roots.end());
  return roots;
}

double hazard_polynomial(double a, double b, double t) {
  if (!(t > 0.0)) throw std::domain_error("hazard_polynomial: t must be positive");
  // t^(a+1) is built as t^a * t so the exponential special case a = b = 1
  // cancels exactly (the classifier keys on the polynomial vanishing there).
  const double ta = std::pow(t, a);
  return -(1.0 + a) * ta * ta + a * a * (1.0 + b) * ta * t +
         (a * a * (1.0 + b) + a * b - a - 2.0) * ta + (a * b - 1.0);
}

DensityClass classify_density(const EollwParams& p, bool* theorem_backed) {
  p.validate();
  if (theorem_backed) {
    *theorem_backed =
        (p.alpha == 1.0 && p.a >= 1.0 && nearly_integer(p.a)) ||
        (p.a > 0.0 && p.a <= 1.0);
  }
  const std::size_t k = density_critical_points(p).size();
  switch (origin_limit(p)) {
    case OriginLimit::kInfinite:
      // Density explodes at the origin and vanishes at infinity: an even
      // number of interior critical points is the only consistent pattern.
      if (k == 0) return DensityClass::kDecreasing;
      if (k == 2) return DensityClass::kDecIncDec;
      return DensityClass::kIndeterminate;
    case OriginLimit::kZero:
      // Density vanishes at both ends: an odd count is required.
      if (k == 1) return DensityClass::kUnimodal;
      if (k == 3) return DensityClass::kBimodal;
      return DensityClass::kIndeterminate;
    case OriginLimit::kFinite:
      if (k == 0) return DensityClass::kDecreasing;
      if (k == 1) return DensityClass::kUnimodal;
      if (k == 2) return DensityClass::kDecIncDec;
      if (k == 3) return DensityClass::kBimodal;
      return DensityClass::kIndeterminate;
  }
  return DensityClass::kIndeterminate;
}

namespace {

// Numeric hazard-shape scan: sign pattern of successive hazard differences
// over a log-spaced grid covering the bulk of the distribution.
HazardClass numeric_hazard_class(const EollwParams& p) {
  const Eollw dist(p);
  const double x_lo = std::max(dist.quantile(1e-4) * 1e-2, 1e-12);
  const double x_hi = dist.quantile(1.0 - 1e-6);
  const int n = 4001;
  const double log_lo = std::log(x_lo);
  const double step = (std::log(x_hi) - log_lo) / (n - 1);
  int sign_changes = 0;
  int first_sign = 0, last_sign = 0;
  double prev_h = dist.hazard(x_lo);
  for (int i = 1; i < n; ++i) {
    const double h = dist.hazard(std::exp(log_lo + i * step));
    if (!std::isfinite(h)) break;
    const double diff = h - prev_h;
    const double tol = 1e-9 * std::max({std::fabs(h), std::fabs(prev_h), 1e-300});
    const int sign = diff > tol ? 1 : (diff < -tol ? -1 : 0);
    if (sign != 0) {
      if (first_sign == 0) first_sign = sign;
      if (last_sign != 0 && sign != last_sign) ++sign_changes;
      last_sign = sign;
    }
    prev_h = h;
  }
  if (sign_changes == 0) {
    // A flat scan (no resolvable slope at all) is a constant hazard,
    // reported as weakly increasing.
    if (first_sign < 0) return HazardClass::kDecreasing;
    return HazardClass::kIncreasing;
  }
  if (sign_changes == 1) {
    if (first_sign < 0 && last_sign > 0) return HazardClass::kBathtub;
    if (first_sign > 0 && last_sign < 0) return HazardClass::kUnimodal;
  }
  return HazardClass::kIndeterminate;
}

}  // namespace

HazardClass classify_hazard(const EollwParams& p, bool* theorem_backed) {
  p.validate();
  if (p.alpha != 1.0) {
    if (theorem_backed) *theorem_backed = false;
    return numeric_hazard_class(p);
  }
  // Sign pattern of the shape-function slope polynomial over the scan grid.
  const double log_lo = std::log(kScanLo);
  const double step = (std::log(kScanHi) - log_lo) / (kScanPoints - 1);
  int changes = 0, first = 0, last = 0;
  for (int i = 0; i < kScanPoints; ++i) {
    const double v = hazard_polynomial(p.a, p.b, std::exp(log_lo + i * step));
    const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
    if (s != 0) {
      if (first == 0) first = s;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
  }
  if (first == 0) {
    // Identically zero polynomial: constant shape function, i.e. the
    // exponential special case with its constant (weakly increasing) hazard.
    if (theorem_backed) *theorem_backed = true;
    return HazardClass::kIncreasing;
  }
  if (changes == 0) {
    // Monotone shape function forces a hazard monotone the same way.
    if (theorem_backed) *theorem_backed = true;
    return first > 0 ? HazardClass::kIncreasing : HazardClass::kDecreasing;
  }
  if (changes == 1) {
    // One crossing leaves a short list of hazard candidates (the reversal
    // matching the shape function's, or a monotone shape); the numeric
    // slope scan picks the member. A scan result outside the list means
    // the numerics could not resolve the theorem's dichotomy.
    const HazardClass numeric = numeric_hazard_class(p);
    const HazardClass reversal =
        first < 0 ? HazardClass::kBathtub : HazardClass::kUnimodal;
    const bool consistent = numeric == reversal ||
                            numeric == HazardClass::kIncreasing ||
                            numeric == HazardClass::kDecreasing;
    if (theorem_backed) *theorem_backed = consistent;
    return consistent ? numeric : HazardClass::kIndeterminate;
  }
  if (theorem_backed) *theorem_backed = false;
  return numeric_hazard_class(p);
}

TailClass classify_tail(const EollwParams& p) {
  p.validate();
  if (p.alpha < 1.0) return TailClass::kUpperHeavy;
  if (p.alpha > 1.0) return TailClass::kUpperLight;
  return TailClass::kBoundary;
}

ShapeReport shape_report(const EollwParams& p) {
  ShapeReport r;
  r.density_class = classify_density(p, &r.density_theorem_backed);
  r.density_critical_points = density_critical_points(p);
  r.hazard_class = classify_hazard(p, &r.hazard_theorem_backed);
  r.tail_class = classify_tail(p);
  return r;
}

}  // namespace eollw
