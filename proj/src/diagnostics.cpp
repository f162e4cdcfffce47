#include "eollw/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "eollw/eollw.hpp"
#include "eollw/rng.hpp"
#include "eollw/stats.hpp"

namespace eollw {

Eigen::VectorXd martingale_residuals(const FitResult& fit,
                                     const CensoredDataset& data) {
  const auto n = data.response.size();
  Eigen::VectorXd r(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    r[i] = data.status[i] +
           predict_log_survival(fit, data.covariates.row(i), data.response[i]);
  }
  return r;
}

Eigen::VectorXd deviance_residuals(const Eigen::VectorXd& martingale,
                                   const Eigen::VectorXd& status) {
  if (martingale.size() != status.size()) {
    throw std::invalid_argument("deviance_residuals: length mismatch");
  }
  Eigen::VectorXd r(martingale.size());
  for (Eigen::Index i = 0; i < martingale.size(); ++i) {
    const double rm = martingale[i];
    const double delta = status[i];
    double radicand = -2.0 * (rm + (delta == 1.0 ? std::log(delta - rm) : 0.0));
    if (radicand < 0.0) {
      if (radicand < -1e-12) {
        throw std::domain_error("deviance_residuals: negative radicand");
      }
      radicand = 0.0;
    }
    r[i] = (rm < 0.0 ? -1.0 : 1.0) * std::sqrt(radicand);
  }
  return r;
}

Eigen::VectorXd normal_plot_positions(std::size_t n) {
  Eigen::VectorXd pos(static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i <= n; ++i) {
    pos[static_cast<Eigen::Index>(i - 1)] = std_normal_quantile(
        (static_cast<double>(i) - 0.375) / (static_cast<double>(n) + 0.25));
  }
  return pos;
}

EnvelopeBands envelope(const FitResult& fitted, const CensoredDataset& data,
                       int replicates, std::uint64_t seed) {
  if (replicates < 1) throw std::invalid_argument("envelope: need replicates >= 1");
  data.validate();
  const auto n = data.response.size();
  const double a = fitted.shape_a();
  const double b = fitted.shape_b();

  // Fitted linear predictors, reused by every replicate.
  Eigen::VectorXd mu(n), sigma(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto [m, ls] = linear_predictors(fitted, data.covariates.row(i));
    mu[i] = m;
    sigma[i] = std::exp(ls);
  }
  const LeollwParams std_params{0.0, 1.0, a, b};
  const Leollw standardized(std_params);

  std::vector<std::vector<double>> sorted_residuals;
  sorted_residuals.reserve(static_cast<std::size_t>(replicates));
  int failed = 0;
  CensoredDataset sim = data;  // covariates and names are shared structure
  for (int k = 0; k < replicates; ++k) {
    CounterRng rng = CounterRng::substream(seed, static_cast<std::uint64_t>(k));
    for (Eigen::Index i = 0; i < n; ++i) {
      const double y_star = mu[i] + sigma[i] * standardized.quantile(rng.uniform());
      if (data.status[i] == 0.0) {
        // The recorded value on a censored row is its censoring time; the
        // simulated lifetime competes against it.
        const double c = data.response[i];
        sim.response[i] = std::min(y_star, c);
        sim.status[i] = y_star < c ? 1.0 : 0.0;
      } else {
        sim.response[i] = y_star;
        sim.status[i] = 1.0;
      }
    }
    try {
      sim.validate();
      const FitResult refit = fit(fitted.spec, sim);
      if (!refit.converged) {
        ++failed;
        continue;
      }
      const Eigen::VectorXd rd =
          deviance_residuals(martingale_residuals(refit, sim), sim.status);
      std::vector<double> sorted(rd.data(), rd.data() + rd.size());
      std::sort(sorted.begin(), sorted.end());
      sorted_residuals.push_back(std::move(sorted));
    } catch (const std::exception&) {
      ++failed;
    }
  }
  if (5 * failed > replicates) {
    throw std::runtime_error("envelope: more than 20% of replicate fits failed");
  }
  if (sorted_residuals.empty()) {
    throw std::runtime_error("envelope: no replicate fit succeeded");
  }

  EnvelopeBands bands;
  bands.replicates_used = static_cast<int>(sorted_residuals.size());
  bands.replicates_failed = failed;
  bands.positions = normal_plot_positions(static_cast<std::size_t>(n));
  bands.lower.resize(n);
  bands.median.resize(n);
  bands.upper.resize(n);
  std::vector<double> column(sorted_residuals.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < sorted_residuals.size(); ++k) {
      column[k] = sorted_residuals[k][static_cast<std::size_t>(i)];
    }
    std::sort(column.begin(), column.end());
    bands.lower[i] = quantile_sorted(column, 0.025);
    bands.median[i] = quantile_sorted(column, 0.5);
    bands.upper[i] = quantile_sorted(column, 0.975);
  }
  Eigen::VectorXd rd_obs =
      deviance_residuals(martingale_residuals(fitted, data), data.status);
  std::vector<double> obs(rd_obs.data(), rd_obs.data() + rd_obs.size());
  std::sort(obs.begin(), obs.end());
  bands.observed =
      Eigen::Map<const Eigen::VectorXd>(obs.data(), static_cast<Eigen::Index>(obs.size()));
  return bands;
}

}  // namespace eollw
