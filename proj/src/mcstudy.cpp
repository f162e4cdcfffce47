#include "eollw/mcstudy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "eollw/diagnostics.hpp"
#include "eollw/eollw.hpp"
#include "eollw/regression.hpp"
#include "eollw/rng.hpp"
#include "eollw/stats.hpp"

namespace eollw {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
// Substream indices: replicate r uses stream r; the calibration sample and
// the covariate-free draws use high tags that replicates can never reach.
constexpr std::uint64_t kCalibrationStream = 0xca11b7a7e0000000ULL;
}  // namespace

void SimConfig::validate() const {
  if (!(sigma > 0.0) || !(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("simulation config: sigma, a, b must be positive");
  }
  if (!std::isfinite(beta10) || !std::isfinite(beta11) || !std::isfinite(beta12)) {
    throw std::invalid_argument("simulation config: coefficients must be finite");
  }
  if (n < 1) throw std::invalid_argument("simulation config: need n >= 1");
  if (replicates < 1) {
    throw std::invalid_argument("simulation config: need replicates >= 1");
  }
  if (!(censoring_target >= 0.0 && censoring_target < 1.0)) {
    throw std::invalid_argument("simulation config: censoring target must lie in [0, 1)");
  }
}

double calibrate_tau(const SimConfig& config) {
  config.validate();
  if (config.censoring_target == 0.0) return kInf;

  // A large fixed sample of latent log-times; the expected censored
  // fraction under Uniform(0, tau) censoring is then a deterministic,
  // decreasing function of tau, and bisection pins the target.
  constexpr int kCalibrationSize = 100000;
  const Leollw standardized({0.0, 1.0, config.a, config.b});
  CounterRng rng = CounterRng::substream(config.seed, kCalibrationStream);
  std::vector<double> latent(kCalibrationSize);
  for (double& v : latent) {
    const double v1 = rng.uniform();
    const double v2 = rng.bernoulli(0.5);
    const double z = standardized.quantile(rng.uniform());
    v = config.beta10 + config.beta11 * v1 + config.beta12 * v2 +
        config.sigma * z;
  }

  // P(censored | y*) = P(C <= y*) = clamp(y*/tau, 0, 1) for C ~ U(0, tau).
  const auto expected_censoring = [&](double tau) {
    double s = 0.0;
    for (double v : latent) s += std::clamp(v / tau, 0.0, 1.0);
    return s / kCalibrationSize;
  };

  double lo = 1e-6, hi = 1e9;
  for (int i = 0; i < 200 && (hi - lo) > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (expected_censoring(mid) > config.censoring_target) {
      lo = mid;  // too much censoring: raise tau
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

CensoredDataset generate_with_tau(const SimConfig& config, double tau,
                                  std::uint64_t seed) {
  const Leollw standardized({0.0, 1.0, config.a, config.b});
  CounterRng rng(seed);
  const auto n = static_cast<Eigen::Index>(config.n);
  CensoredDataset data;
  data.response.resize(n);
  data.status.resize(n);
  data.covariates.resize(n, 2);
  data.covariate_names = {"v1", "v2"};
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v1 = rng.uniform();
    const double v2 = rng.bernoulli(0.5);
    const double z = standardized.quantile(rng.uniform());
    const double y_star =
        config.beta10 + config.beta11 * v1 + config.beta12 * v2 + config.sigma * z;
    data.covariates(i, 0) = v1;
    data.covariates(i, 1) = v2;
    if (tau == kInf) {
      data.response[i] = y_star;
      data.status[i] = 1.0;
    } else {
      const double c = tau * rng.uniform();
      data.response[i] = std::min(y_star, c);
      data.status[i] = y_star < c ? 1.0 : 0.0;
    }
  }
  return data;
}

// Run fn(replicate_index) over all replicates, spreading across hardware
// threads when more than one is available.
void for_each_replicate(std::size_t replicates,
                        const std::function<void(std::size_t)>& fn) {
  const std::size_t hw = std::max<std::size_t>(std::thread::hardware_concurrency(), 1);
  const std::size_t workers = std::min(hw, replicates);
  if (workers <= 1) {
    for (std::size_t r = 0; r < replicates; ++r) fn(r);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t r = w; r < replicates; r += workers) fn(r);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

CensoredDataset generate_replicate(const SimConfig& config, std::uint64_t seed) {
  config.validate();
  return generate_with_tau(config, calibrate_tau(config), seed);
}

CellSummary run_study(const SimConfig& config) {
  config.validate();
  const double tau = calibrate_tau(config);
  const ModelSpec spec{Family::kLeollw, {0, 1}, {}};
  const std::size_t k = 6;  // beta10 beta11 beta12 sigma a b

  // True values on the fitting scale (coverage) and natural scale (AE/MSE).
  const std::array<double, 6> truth_natural = {config.beta10, config.beta11,
                                               config.beta12, config.sigma,
                                               config.a,      config.b};
  const std::array<double, 6> truth_fitting = {
      config.beta10,        config.beta11,        config.beta12,
      std::log(config.sigma), std::log(config.a), std::log(config.b)};

  struct Accumulator {
    std::array<double, 6> sum{}, sum_sq{};
    std::array<std::size_t, 6> covered{};
    double censored_fraction_sum = 0.0;
    std::size_t used = 0, failed = 0;
  } acc;
  std::mutex acc_mutex;

  for_each_replicate(config.replicates, [&](std::size_t r) {
    const CensoredDataset data =
        generate_with_tau(config, tau, CounterRng::substream(config.seed, r).next_u64());
    FitResult res;
    try {
      res = fit(spec, data);
    } catch (const std::exception&) {
      std::lock_guard<std::mutex> lock(acc_mutex);
      ++acc.failed;
      return;
    }
    if (!res.converged || !res.standard_errors.has_value()) {
      std::lock_guard<std::mutex> lock(acc_mutex);
      ++acc.failed;
      return;
    }
    // Fitting-scale estimates are theta directly; natural scale exponentiates
    // the last three (log sigma, log a, log b).
    std::array<double, 6> est_fit{}, est_nat{};
    for (std::size_t j = 0; j < k; ++j) est_fit[j] = res.theta[static_cast<Eigen::Index>(j)];
    est_nat = est_fit;
    for (std::size_t j = 3; j < 6; ++j) est_nat[j] = std::exp(est_fit[j]);

    const Eigen::VectorXd& se = *res.standard_errors;
    double censored = 0.0;
    for (Eigen::Index i = 0; i < data.status.size(); ++i) {
      censored += data.status[i] == 0.0 ? 1.0 : 0.0;
    }
    censored /= static_cast<double>(data.status.size());

    std::lock_guard<std::mutex> lock(acc_mutex);
    for (std::size_t j = 0; j < k; ++j) {
      const double err = est_nat[j] - truth_natural[j];
      acc.sum[j] += est_nat[j];
      acc.sum_sq[j] += err * err;
      const double half = 1.96 * se[static_cast<Eigen::Index>(j)];
      if (est_fit[j] - half <= truth_fitting[j] &&
          truth_fitting[j] <= est_fit[j] + half) {
        ++acc.covered[j];
      }
    }
    acc.censored_fraction_sum += censored;
    ++acc.used;
  });

  if (20 * acc.failed > config.replicates) {
    throw std::runtime_error("simulation study: more than 5% of replicate fits failed");
  }
  if (acc.used == 0) {
    throw std::runtime_error("simulation study: no replicate fit succeeded");
  }

  CellSummary out;
  out.config = config;
  out.tau = tau;
  out.replicates_used = acc.used;
  out.replicates_failed = acc.failed;
  out.realized_censoring = acc.censored_fraction_sum / static_cast<double>(acc.used);
  static const std::array<const char*, 6> names = {"beta10", "beta11", "beta12",
                                                   "sigma",  "a",      "b"};
  const double used = static_cast<double>(acc.used);
  for (std::size_t j = 0; j < k; ++j) {
    ParamSummary p;
    p.name = names[j];
    p.true_value = truth_natural[j];
    p.average_estimate = acc.sum[j] / used;
    p.bias = p.average_estimate - truth_natural[j];
    p.mse = acc.sum_sq[j] / used;
    p.coverage = static_cast<double>(acc.covered[j]) / used;
    out.parameters.push_back(std::move(p));
  }
  return out;
}

ResidualStudySummary residual_normality_study(const SimConfig& config) {
  config.validate();
  const double tau = calibrate_tau(config);
  const ModelSpec spec{Family::kLeollw, {0, 1}, {}};

  std::vector<double> pooled_martingale, pooled_deviance;
  std::size_t used = 0, failed = 0;
  std::mutex pool_mutex;

  for_each_replicate(config.replicates, [&](std::size_t r) {
    const CensoredDataset data =
        generate_with_tau(config, tau, CounterRng::substream(config.seed, r).next_u64());
    FitResult res;
    try {
      res = fit(spec, data);
    } catch (const std::exception&) {
      std::lock_guard<std::mutex> lock(pool_mutex);
      ++failed;
      return;
    }
    if (!res.converged) {
      std::lock_guard<std::mutex> lock(pool_mutex);
      ++failed;
      return;
    }
    const Eigen::VectorXd rm = martingale_residuals(res, data);
    const Eigen::VectorXd rd = deviance_residuals(rm, data.status);
    std::lock_guard<std::mutex> lock(pool_mutex);
    pooled_martingale.insert(pooled_martingale.end(), rm.data(), rm.data() + rm.size());
    pooled_deviance.insert(pooled_deviance.end(), rd.data(), rd.data() + rd.size());
    ++used;
  });

  if (20 * failed > config.replicates) {
    throw std::runtime_error("residual study: more than 5% of replicate fits failed");
  }
  if (used == 0) throw std::runtime_error("residual study: no replicate fit succeeded");

  ResidualStudySummary out;
  out.config = config;
  out.replicates_used = used;
  out.replicates_failed = failed;
  out.martingale_skewness = skewness(pooled_martingale);
  out.martingale_kurtosis = kurtosis(pooled_martingale);
  out.deviance_ks_distance = ks_statistic(pooled_deviance, std_normal_cdf);
  return out;
}

}  // namespace eollw
