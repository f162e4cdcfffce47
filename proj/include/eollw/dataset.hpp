#pragma once

// Right-censored dataset: log-time response, failure indicator, covariate
// columns. The indicator is 1 for an observed failure, 0 for a censored
// time.

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace eollw {

struct CensoredDataset {
  Eigen::VectorXd response;         // log-time y
  Eigen::VectorXd status;           // 1 = failure, 0 = censored
  Eigen::MatrixXd covariates;       // n x p, without intercept
  std::vector<std::string> covariate_names;  // size p

  std::size_t size() const { return static_cast<std::size_t>(response.size()); }

  // Throws std::invalid_argument on size mismatch, NaN, an indicator value
  // outside {0, 1}, or a dataset with no observed failure.
  void validate() const;
};

}  // namespace eollw
