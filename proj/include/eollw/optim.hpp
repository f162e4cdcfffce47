#pragma once

// Quasi-Newton minimizer: BFGS on the inverse Hessian with Armijo
// backtracking. The objective callback returns the function value and, when
// the pointer is non-null, writes the gradient. Non-finite objective values
// are treated as out-of-bounds and rejected by the line search.

#include <Eigen/Dense>
#include <functional>

namespace eollw {

using Objective =
    std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd* grad)>;

struct MinimizeOptions {
  int max_iterations = 500;
  double gradient_tolerance = 1e-5;       // infinity norm
  double relative_change_tolerance = 1e-9;
};

struct MinimizeResult {
  Eigen::VectorXd x;
  double value = 0.0;
  Eigen::VectorXd gradient;
  double gradient_norm = 0.0;  // infinity norm at the solution
  int iterations = 0;
  bool converged = false;
};

MinimizeResult minimize_bfgs(const Objective& f, Eigen::VectorXd x0,
                             const MinimizeOptions& options = {});

}  // namespace eollw
