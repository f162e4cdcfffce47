#include "eollw/optim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace eollw {

MinimizeResult minimize_bfgs(const Objective& f, Eigen::VectorXd x0,
                             const MinimizeOptions& options) {
  const auto n = x0.size();
  if (n == 0) throw std::invalid_argument("minimize_bfgs: empty start vector");

  MinimizeResult res;
  Eigen::VectorXd x = std::move(x0);
  Eigen::VectorXd grad(n);
  double fx = f(x, &grad);
  if (!std::isfinite(fx) || !grad.allFinite()) {
    throw std::invalid_argument("minimize_bfgs: objective not finite at the start");
  }

  Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);
  bool first_update = true;
  constexpr double kArmijo = 1e-4;

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    res.iterations = iter;
    if (grad.lpNorm<Eigen::Infinity>() < options.gradient_tolerance) {
      res.converged = true;
      break;
    }

    Eigen::VectorXd direction = -(h_inv * grad);
    double slope = direction.dot(grad);
    if (!(slope < 0.0)) {
      // Curvature information went stale; restart from steepest descent.
      h_inv.setIdentity();
      first_update = true;
      direction = -grad;
      slope = -grad.squaredNorm();
    }

    // Backtracking line search with the Armijo sufficient-decrease rule.
    double step = 1.0;
    double fx_new = std::numeric_limits<double>::infinity();
    Eigen::VectorXd x_new(n), grad_new(n);
    bool accepted = false;
    while (step > 1e-20) {
      x_new = x + step * direction;
      fx_new = f(x_new, &grad_new);
      if (std::isfinite(fx_new) && grad_new.allFinite() &&
          fx_new <= fx + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // stalled: no acceptable step along the direction

    const Eigen::VectorXd s = x_new - x;
    const Eigen::VectorXd y = grad_new - grad;
    const double sy = s.dot(y);

    const bool small_change =
        std::fabs(fx - fx_new) <=
        options.relative_change_tolerance * (std::fabs(fx_new) + 1.0);
    x = std::move(x_new);
    fx = fx_new;
    grad = grad_new;
    if (small_change) {
      res.converged = true;
      break;
    }

    if (sy > 1e-10 * s.norm() * y.norm()) {
      if (first_update) {
        // Scale the initial metric to the first curvature pair; this keeps
        // mixed-magnitude parameterizations from thrashing the line search.
        h_inv *= sy / y.squaredNorm();
        first_update = false;
      }
      const double rho = 1.0 / sy;
      const Eigen::VectorXd hy = h_inv * y;
      // BFGS inverse update: (I - rho*s*y')*H*(I - rho*y*s') + rho*s*s'
      h_inv.noalias() -= rho * (s * hy.transpose() + hy * s.transpose());
      h_inv.noalias() +=
          (rho * rho * (y.dot(hy)) + rho) * (s * s.transpose());
    }
  }

  // A gradient already below tolerance on the final point also counts.
  if (!res.converged &&
      grad.lpNorm<Eigen::Infinity>() < options.gradient_tolerance) {
    res.converged = true;
  }
  res.x = std::move(x);
  res.value = fx;
  res.gradient = std::move(grad);
  res.gradient_norm = res.gradient.lpNorm<Eigen::Infinity>();
  return res;
}

}  // namespace eollw
