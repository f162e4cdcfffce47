#pragma once

// Location-scale regression for right-censored log-times with the two-shape
// error law: both the location and the log-scale are linear in covariates,
// the shapes enter through log links, and everything is estimated jointly
// by maximum likelihood. Restricted families pin one or both shapes at 1:
//
//   leollw - both shapes free
//   lollw  - b pinned at 1
//   lew    - a pinned at 1
//   lw     - both pinned: the classical log-Weibull (Gumbel) AFT model
//
// The fitting scale is (beta_mu, beta_sigma, log a, log b).

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eollw/dataset.hpp"
#include "eollw/optim.hpp"

namespace eollw {

enum class Family { kLeollw, kLollw, kLew, kLw };

std::string to_string(Family f);
Family family_from_string(const std::string& name);  // std::invalid_argument

struct ModelSpec {
  Family family = Family::kLeollw;
  // Covariate column indices entering each linear predictor; the intercept
  // is always prepended and never listed here.
  std::vector<std::size_t> mu_columns;
  std::vector<std::size_t> sigma_columns;
};

struct FitOptions {
  MinimizeOptions minimize;
  // Hessian step factor for standard errors: step_j = h*(1 + |theta_j|).
  double hessian_step = 1e-4;
};

struct FitResult {
  ModelSpec spec;
  std::vector<std::string> parameter_names;
  Eigen::VectorXd theta;                    // fitting scale
  std::optional<Eigen::VectorXd> standard_errors;
  std::string se_note;                      // set when SEs are absent
  double loglik = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  std::size_t n_rows = 0;
  std::size_t n_mu = 0;     // location coefficients (incl. intercept)
  std::size_t n_sigma = 0;  // log-scale coefficients (incl. intercept)
  bool free_a = false;
  bool free_b = false;

  std::size_t n_parameters() const { return static_cast<std::size_t>(theta.size()); }
  double log_a() const { return free_a ? theta[n_mu + n_sigma] : 0.0; }
  double log_b() const {
    return free_b ? theta[n_mu + n_sigma + (free_a ? 1 : 0)] : 0.0;
  }
  double shape_a() const;
  double shape_b() const;
};

// Design matrices with the intercept column prepended. Throws
// std::invalid_argument on out-of-range column indices or a rank-deficient
// matrix (column-pivoted QR, threshold 1e-10 relative to the largest
// column norm).
struct Design {
  Eigen::MatrixXd x_mu;
  Eigen::MatrixXd x_sigma;
};
Design build_design(const CensoredDataset& data, const ModelSpec& spec);

// Censored log-likelihood on the fitting scale; writes the analytic
// gradient when grad is non-null. Returns -infinity (never NaN) when the
// parameter point is degenerate, which the optimizer treats as rejection.
double loglik(const Eigen::VectorXd& theta, const ModelSpec& spec,
              const Design& design, const CensoredDataset& data,
              Eigen::VectorXd* grad = nullptr);

// Two-stage maximum likelihood: a pinned-shapes fit seeds the coefficient
// vector, then the requested family is fitted from that start with the
// shape logs starting at 0. Non-convergence is reported through the result
// (converged = false), not an exception.
FitResult fit(const ModelSpec& spec, const CensoredDataset& data,
              const FitOptions& options = {});

// (AIC, BIC, CAIC) = -2l + {2k, k log n, k(log n + 1)}.
std::array<double, 3> information_criteria(double loglik_value,
                                           std::size_t n_parameters,
                                           std::size_t n_rows);

struct LrTest {
  double statistic;  // 2*(l_full - l_sub), clamped at 0
  double p_value;    // chi-square upper tail
  std::size_t df;
};

// Throws std::invalid_argument when the statistic is negative beyond the
// -1e-6 numerical slack (the "full" fit lost to its own submodel, which
// signals an optimizer failure).
LrTest lr_test(const FitResult& full, const FitResult& sub, std::size_t df);

// Survival of a new observation at log-time y given a full covariate row
// (same width as the training covariate matrix). Throws on width mismatch.
double predict_survival(const FitResult& fit, const Eigen::VectorXd& covariates,
                        double y);
double predict_log_survival(const FitResult& fit,
                            const Eigen::VectorXd& covariates, double y);

// Location and log-scale linear predictors for one covariate row.
std::pair<double, double> linear_predictors(const FitResult& fit,
                                            const Eigen::VectorXd& covariates);

}  // namespace eollw
