#pragma once

// Residual diagnostics for censored fits: martingale residuals, their
// deviance transform, and parametric-bootstrap envelopes for normal
// probability plots.

#include <Eigen/Dense>
#include <cstdint>

#include "eollw/dataset.hpp"
#include "eollw/regression.hpp"

namespace eollw {

// r_M = status + log S_hat(y), with the log-survival evaluated directly in
// log space. Always <= 1; equals 1 + log S only on failure rows.
Eigen::VectorXd martingale_residuals(const FitResult& fit,
                                     const CensoredDataset& data);

// Deviance transform: sign(r_M) * sqrt(-2*[r_M + status*log(status - r_M)]).
// A radicand below -1e-12 raises std::domain_error; tiny negatives inside
// that slack clamp to zero.
Eigen::VectorXd deviance_residuals(const Eigen::VectorXd& martingale,
                                   const Eigen::VectorXd& status);

// Normal plotting positions Phi^-1((i - 3/8)/(n + 1/4)), i = 1..n.
Eigen::VectorXd normal_plot_positions(std::size_t n);

struct EnvelopeBands {
  Eigen::VectorXd positions;  // expected normal order statistics
  Eigen::VectorXd lower;      // pointwise 2.5% band
  Eigen::VectorXd median;
  Eigen::VectorXd upper;      // pointwise 97.5% band
  Eigen::VectorXd observed;   // sorted observed deviance residuals
  int replicates_used = 0;
  int replicates_failed = 0;
};

// Parametric bootstrap: simulate from the fitted model at the observed
// covariates (censored rows keep their recorded censoring times), refit,
// and collect sorted deviance residuals. Failed refits are dropped;
// std::runtime_error when more than 20% fail.
EnvelopeBands envelope(const FitResult& fit, const CensoredDataset& data,
                       int replicates, std::uint64_t seed);

}  // namespace eollw
