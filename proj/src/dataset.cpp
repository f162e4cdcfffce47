#include "eollw/dataset.hpp"

#include <stdexcept>

namespace eollw {

void CensoredDataset::validate() const {
  const auto n = response.size();
  if (n == 0) throw std::invalid_argument("dataset: no rows");
  if (status.size() != n) {
    throw std::invalid_argument("dataset: status length does not match response");
  }
  if (covariates.rows() != 0 && covariates.rows() != n) {
    throw std::invalid_argument("dataset: covariate rows do not match response");
  }
  if (covariate_names.size() != static_cast<std::size_t>(covariates.cols())) {
    throw std::invalid_argument("dataset: covariate names do not match columns");
  }
  if (!response.allFinite()) {
    throw std::invalid_argument("dataset: response contains a non-finite value");
  }
  if (covariates.size() > 0 && !covariates.allFinite()) {
    throw std::invalid_argument("dataset: covariates contain a non-finite value");
  }
  bool any_failure = false;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d = status[i];
    if (d != 0.0 && d != 1.0) {
      throw std::invalid_argument("dataset: status must be 0 (censored) or 1 (failure)");
    }
    any_failure = any_failure || d == 1.0;
  }
  if (!any_failure) {
    throw std::invalid_argument("dataset: needs at least one uncensored row");
  }
}

}  // namespace eollw
