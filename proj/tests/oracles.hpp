#pragma once

// Independent numeric oracles for the test suites: double-exponential
// quadrature (handles the integrable endpoint singularities our densities
// produce when the origin exponent is negative), finite differences, and
// bisection. The quadrature is Boost's, so test expectations never share
// code with the library paths they check.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

using Fn = std::function<double(double)>;

// Integral over the finite interval (lo, hi); endpoint singularities of
// order milder than 1/x are fine.
inline double integrate(const Fn& f, double lo, double hi,
                        double tol = 1e-10) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, lo, hi, tol);
}

// Integral over (lo, infinity).
inline double integrate_to_inf(const Fn& f, double lo, double tol = 1e-10) {
  boost::math::quadrature::exp_sinh<double> integrator;
  if (lo == 0.0) return integrator.integrate(f, tol);
  return integrator.integrate([&](double t) { return f(lo + t); }, tol);
}

// Integral over the whole real line.
inline double integrate_real_line(const Fn& f, double tol = 1e-10) {
  boost::math::quadrature::sinh_sinh<double> integrator;
  return integrator.integrate(f, tol);
}

// Five-point central-difference first derivative.
inline double derivative(const Fn& f, double x, double h) {
  return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) /
         (12.0 * h);
}

// Bisection for a root of f on [lo, hi]; requires a sign change.
inline double bisect(const Fn& f, double lo, double hi, double rel_tol = 1e-13) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::invalid_argument("bisect: no sign change on the interval");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
    if (hi - lo <= rel_tol * (std::fabs(lo) + std::fabs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle
