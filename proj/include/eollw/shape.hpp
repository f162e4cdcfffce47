#pragma once

// Shape analysis for the Weibull-baseline family: density modality, hazard
// shape and tail weight. Critical points of the density solve a
// one-dimensional equation whose two sides split cleanly: one side depends
// only on the Weibull shape (the baseline side), the other only on the
// generator shapes (the shape side). The log-time standardized density has
// the same structure with its own baseline side.

#include <string>
#include <vector>

#include "eollw/eollw.hpp"

namespace eollw {

enum class DensityClass {
  kDecreasing,
  kUnimodal,
  kDecIncDec,  // decreasing, then increasing, then decreasing
  kBimodal,
  kIndeterminate,
};

enum class HazardClass {
  kIncreasing,
  kDecreasing,
  kBathtub,    // decreasing, then increasing
  kUnimodal,   // increasing, then decreasing (upside-down bathtub)
  kIndeterminate,
};

enum class TailClass {
  kUpperHeavy,
  kBoundary,  // exponential-order tail; the limit direction depends on t
  kUpperLight,
};

std::string to_string(DensityClass c);
std::string to_string(HazardClass c);
std::string to_string(TailClass c);

// Baseline side of the critical-point equation, a function of
// omega = (x/lambda)^alpha. Throws std::domain_error for omega <= 0.
double crit_baseline_side(double omega, double alpha);

// Shape side, a function of the generator shapes only. Stable for large
// omega (evaluated through logexpm1, never forming exp(omega) directly).
// Limits: 1 - a*b as omega -> 0+, 1 + a as omega -> infinity.
double crit_shape_side(double omega, double a, double b);

// Log-time baseline side, a function of omega = exp(z) alone.
double crit_logtime_side(double omega);

// Location of the maximum of the log-time baseline side on (0, inf).
double crit_logtime_side_maximizer();

// Interior critical points of the time-scale density, on the x scale,
// strictly increasing. Sign-change scan over a log-spaced grid followed by
// bisection; an empty result means no interior critical point.
std::vector<double> density_critical_points(const EollwParams& p);

// Interior critical points of the standardized log-time density, on the
// z scale. At least one root always exists.
std::vector<double> leollw_critical_points(double a, double b);

// Polynomial controlling the sign of the derivative of the shape function
// eta(x) = -f'(x)/f(x) when the Weibull shape is 1, as a function of
// t = exp(x/lambda) - 1 > 0:
//   eta'(x) = (t+1) * p(t) / (lambda^2 t^2 (t^a + 1)^2).
// Identically zero when a = b = 1 (constant eta: the exponential case).
// The sign pattern of eta' translates into the hazard class through the
// standard shape-function argument. Throws std::domain_error for t <= 0.
double hazard_polynomial(double a, double b, double t);

// Density classification from the critical-point count combined with the
// boundary limit of the density at the origin. theorem_backed (optional
// out-param) reports whether the parameters fall in the regime where the
// classification is backed by a proven result (alpha = 1 with integer a,
// or 0 < a <= 1) rather than numerics alone.
DensityClass classify_density(const EollwParams& p,
                              bool* theorem_backed = nullptr);

// Hazard classification. With alpha = 1 the sign pattern of the polynomial
// above settles the shape-function direction globally: single-signed
// patterns give a monotone hazard outright, and a one-crossing pattern
// narrows the hazard to two candidates that a numeric slope scan then
// separates; those routes are theorem_backed. For alpha != 1, or when the
// pattern has several crossings, the classification is purely numeric and
// theorem_backed is false.
HazardClass classify_hazard(const EollwParams& p,
                            bool* theorem_backed = nullptr);

// Tail weight is governed by the Weibull shape alone: heavy below 1,
// light above 1, boundary exactly at 1.
TailClass classify_tail(const EollwParams& p);

struct ShapeReport {
  DensityClass density_class;
  bool density_theorem_backed;
  std::vector<double> density_critical_points;  // x scale
  HazardClass hazard_class;
  bool hazard_theorem_backed;
  TailClass tail_class;
};

ShapeReport shape_report(const EollwParams& p);

}  // namespace eollw
