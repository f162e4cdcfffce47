#include "eollw/regression.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "eollw/eollw.hpp"
#include "eollw/stats.hpp"

namespace eollw {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
// Reject points where a link exponent has run off to absurd magnitude;
// the likelihood is flat garbage there and exp() would overflow.
constexpr double kLinkBound = 50.0;
}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::kLeollw: return "leollw";
    case Family::kLollw: return "lollw";
    case Family::kLew: return "lew";
    case Family::kLw: return "lw";
  }
  return "leollw";
}

Family family_from_string(const std::string& name) {
  if (name == "leollw") return Family::kLeollw;
  if (name == "lollw") return Family::kLollw;
  if (name == "lew") return Family::kLew;
  if (name == "lw") return Family::kLw;
  throw std::invalid_argument("unknown family '" + name +
                              "' (expected leollw, lollw, lew or lw)");
}

double FitResult::shape_a() const { return std::exp(log_a()); }
double FitResult::shape_b() const { return std::exp(log_b()); }

namespace {

bool family_frees_a(Family f) {
  return f == Family::kLeollw || f == Family::kLollw;
}
bool family_frees_b(Family f) {
  return f == Family::kLeollw || f == Family::kLew;
}

Eigen::MatrixXd with_intercept(const CensoredDataset& data,
                               const std::vector<std::size_t>& columns) {
  const auto n = data.response.size();
  Eigen::MatrixXd x(n, 1 + columns.size());
  x.col(0).setOnes();
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] >= static_cast<std::size_t>(data.covariates.cols())) {
      throw std::invalid_argument("design: covariate index out of range");
    }
    x.col(1 + static_cast<Eigen::Index>(j)) =
        data.covariates.col(static_cast<Eigen::Index>(columns[j]));
  }
  return x;
}

void check_rank(const Eigen::MatrixXd& x, const char* which) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  qr.setThreshold(1e-10);
  if (qr.rank() < x.cols()) {
    throw std::invalid_argument(std::string("design: ") + which +
                                " matrix is rank deficient");
  }
}

}  // namespace

Design build_design(const CensoredDataset& data, const ModelSpec& spec) {
  Design d;
  d.x_mu = with_intercept(data, spec.mu_columns);
  d.x_sigma = with_intercept(data, spec.sigma_columns);
  check_rank(d.x_mu, "location");
  check_rank(d.x_sigma, "scale");
  return d;
}

double loglik(const Eigen::VectorXd& theta, const ModelSpec& spec,
              const Design& design, const CensoredDataset& data,
              Eigen::VectorXd* grad) {
  const auto p_mu = design.x_mu.cols();
  const auto p_sigma = design.x_sigma.cols();
  const bool free_a = family_frees_a(spec.family);
  const bool free_b = family_frees_b(spec.family);
  const auto expected =
      p_mu + p_sigma + (free_a ? 1 : 0) + (free_b ? 1 : 0);
  if (theta.size() != expected) {
    throw std::invalid_argument("loglik: parameter vector has the wrong length");
  }

  const double log_a = free_a ? theta[p_mu + p_sigma] : 0.0;
  const double log_b = free_b ? theta[p_mu + p_sigma + (free_a ? 1 : 0)] : 0.0;
  if (std::fabs(log_a) > kLinkBound || std::fabs(log_b) > kLinkBound) {
    return -kInf;
  }
  const double a = std::exp(log_a);
  const double b = std::exp(log_b);

  if (grad) grad->setZero(expected);
  const auto beta_mu = theta.head(p_mu);
  const auto beta_sigma = theta.segment(p_mu, p_sigma);

  double ll = 0.0;
  double g_log_a = 0.0, g_log_b = 0.0;
  const auto n = data.response.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mu = design.x_mu.row(i).dot(beta_mu);
    const double log_sigma = design.x_sigma.row(i).dot(beta_sigma);
    if (!std::isfinite(mu) || std::fabs(log_sigma) > kLinkBound) return -kInf;
    const double sigma = std::exp(log_sigma);
    const double z = (data.response[i] - mu) / sigma;
    const bool failure = data.status[i] == 1.0;

    const auto t = detail::lifetime_terms(z, a, b, grad != nullptr);
    ll += failure ? t.log_pdf - log_sigma : t.log_sf;

    if (grad) {
      const double dz = failure ? t.df_dz : t.ds_dz;
      grad->head(p_mu) -= (dz / sigma) * design.x_mu.row(i).transpose();
      grad->segment(p_mu, p_sigma) -=
          (dz * z + (failure ? 1.0 : 0.0)) *
          design.x_sigma.row(i).transpose();
      if (free_a) g_log_a += a * (failure ? t.df_da : t.ds_da);
      if (free_b) g_log_b += b * (failure ? t.df_db : t.ds_db);
    }
  }
  if (!std::isfinite(ll)) return -kInf;
  if (grad) {
    if (free_a) (*grad)[p_mu + p_sigma] = g_log_a;
    if (free_b) (*grad)[p_mu + p_sigma + (free_a ? 1 : 0)] = g_log_b;
    if (!grad->allFinite()) return -kInf;
  }
  return ll;
}

namespace {

std::vector<std::string> parameter_names(const CensoredDataset& data,
                                         const ModelSpec& spec, bool free_a,
                                         bool free_b) {
  std::vector<std::string> names;
  names.push_back("mu.(intercept)");
  for (auto c : spec.mu_columns) names.push_back("mu." + data.covariate_names[c]);
  names.push_back("logsigma.(intercept)");
  for (auto c : spec.sigma_columns) {
    names.push_back("logsigma." + data.covariate_names[c]);
  }
  if (free_a) names.push_back("log_a");
  if (free_b) names.push_back("log_b");
  return names;
}

// Observed-information standard errors: central finite differences of the
// analytic gradient, symmetrized, then a Cholesky solve of the negated
// matrix. A failed factorization reports absent SEs rather than throwing.
void fill_standard_errors(FitResult& out, const ModelSpec& spec,
                          const Design& design, const CensoredDataset& data,
                          double step_factor) {
  const auto k = out.theta.size();
  Eigen::MatrixXd hessian(k, k);
  Eigen::VectorXd gp(k), gm(k), probe;
  for (Eigen::Index j = 0; j < k; ++j) {
    const double h = step_factor * (1.0 + std::fabs(out.theta[j]));
    probe = out.theta;
    probe[j] = out.theta[j] + h;
    if (loglik(probe, spec, design, data, &gp) == -kInf) {
      out.se_note = "standard errors unavailable: likelihood degenerate near the optimum";
      return;
    }
    probe[j] = out.theta[j] - h;
    if (loglik(probe, spec, design, data, &gm) == -kInf) {
      out.se_note = "standard errors unavailable: likelihood degenerate near the optimum";
      return;
    }
    hessian.col(j) = (gp - gm) / (2.0 * h);
  }
  Eigen::MatrixXd neg_hessian = -0.5 * (hessian + hessian.transpose());
  Eigen::LLT<Eigen::MatrixXd> llt(neg_hessian);
  if (llt.info() != Eigen::Success) {
    out.se_note = "standard errors unavailable: observed information is not positive definite";
    return;
  }
  const Eigen::MatrixXd cov = llt.solve(Eigen::MatrixXd::Identity(k, k));
  Eigen::VectorXd se(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    if (!(cov(j, j) > 0.0)) {
      out.se_note = "standard errors unavailable: nonpositive variance estimate";
      return;
    }
    se[j] = std::sqrt(cov(j, j));
  }
  out.standard_errors = std::move(se);
}

}  // namespace

FitResult fit(const ModelSpec& spec, const CensoredDataset& data,
              const FitOptions& options) {
  data.validate();
  const Design design = build_design(data, spec);
  const auto p_mu = design.x_mu.cols();
  const auto p_sigma = design.x_sigma.cols();
  const bool free_a = family_frees_a(spec.family);
  const bool free_b = family_frees_b(spec.family);

  // Least-squares seed for the location coefficients; the residual spread
  // seeds the log-scale intercept.
  const Eigen::VectorXd beta_mu0 =
      design.x_mu.colPivHouseholderQr().solve(data.response);
  const Eigen::VectorXd resid = data.response - design.x_mu * beta_mu0;
  const auto dof = std::max<Eigen::Index>(data.response.size() - p_mu, 1);
  const double spread =
      std::max(std::sqrt(resid.squaredNorm() / static_cast<double>(dof)), 1e-3);

  ModelSpec pinned = spec;
  pinned.family = Family::kLw;
  Eigen::VectorXd theta_pinned(p_mu + p_sigma);
  theta_pinned.head(p_mu) = beta_mu0;
  theta_pinned.segment(p_mu, p_sigma).setZero();
  theta_pinned[p_mu] = std::log(spread);

  const auto negate = [](const ModelSpec& s, const Design& d,
                         const CensoredDataset& dat) {
    return [&s, &d, &dat](const Eigen::VectorXd& x, Eigen::VectorXd* g) {
      const double v = loglik(x, s, d, dat, g);
      if (g) (*g) = -(*g);
      return -v;
    };
  };

  MinimizeResult stage = minimize_bfgs(negate(pinned, design, data),
                                       theta_pinned, options.minimize);

  if (spec.family != Family::kLw) {
    Eigen::VectorXd theta0(p_mu + p_sigma + (free_a ? 1 : 0) + (free_b ? 1 : 0));
    theta0.setZero();
    theta0.head(p_mu + p_sigma) = stage.x;
    stage = minimize_bfgs(negate(spec, design, data), theta0, options.minimize);
  }

  FitResult out;
  out.spec = spec;
  out.parameter_names = parameter_names(data, spec, free_a, free_b);
  out.theta = stage.x;
  out.loglik = -stage.value;
  out.gradient_norm = stage.gradient_norm;
  out.iterations = stage.iterations;
  out.converged = stage.converged;
  out.n_rows = data.size();
  out.n_mu = static_cast<std::size_t>(p_mu);
  out.n_sigma = static_cast<std::size_t>(p_sigma);
  out.free_a = free_a;
  out.free_b = free_b;
  if (out.converged) {
    fill_standard_errors(out, spec, design, data, options.hessian_step);
  } else {
    out.se_note = "standard errors unavailable: fit did not converge";
  }
  return out;
}

std::array<double, 3> information_criteria(double loglik_value,
                                           std::size_t n_parameters,
                                           std::size_t n_rows) {
  const double k = static_cast<double>(n_parameters);
  const double log_n = std::log(static_cast<double>(n_rows));
  const double base = -2.0 * loglik_value;
  return {base + 2.0 * k, base + k * log_n, base + k * (log_n + 1.0)};
}

LrTest lr_test(const FitResult& full, const FitResult& sub, std::size_t df) {
  double w = 2.0 * (full.loglik - sub.loglik);
  if (w < -1e-6) {
    throw std::invalid_argument(
        "lr_test: full-model likelihood fell below the submodel's; refit before testing");
  }
  if (w < 0.0) w = 0.0;
  return {w, chi_square_upper_tail(w, static_cast<double>(df)), df};
}

std::pair<double, double> linear_predictors(const FitResult& fit,
                                            const Eigen::VectorXd& covariates) {
  std::size_t max_col = 0;
  for (auto c : fit.spec.mu_columns) max_col = std::max(max_col, c + 1);
  for (auto c : fit.spec.sigma_columns) max_col = std::max(max_col, c + 1);
  if (static_cast<std::size_t>(covariates.size()) < max_col) {
    throw std::invalid_argument("predict: covariate row is too short for the model");
  }
  double mu = fit.theta[0];
  for (std::size_t j = 0; j < fit.spec.mu_columns.size(); ++j) {
    mu += fit.theta[1 + static_cast<Eigen::Index>(j)] *
          covariates[static_cast<Eigen::Index>(fit.spec.mu_columns[j])];
  }
  const auto base = static_cast<Eigen::Index>(fit.n_mu);
  double log_sigma = fit.theta[base];
  for (std::size_t j = 0; j < fit.spec.sigma_columns.size(); ++j) {
    log_sigma += fit.theta[base + 1 + static_cast<Eigen::Index>(j)] *
                 covariates[static_cast<Eigen::Index>(fit.spec.sigma_columns[j])];
  }
  return {mu, log_sigma};
}

double predict_log_survival(const FitResult& fit,
                            const Eigen::VectorXd& covariates, double y) {
  const auto [mu, log_sigma] = linear_predictors(fit, covariates);
  const double z = (y - mu) / std::exp(log_sigma);
  return detail::lifetime_terms(z, fit.shape_a(), fit.shape_b(), false).log_sf;
}

double predict_survival(const FitResult& fit, const Eigen::VectorXd& covariates,
                        double y) {
  return std::exp(predict_log_survival(fit, covariates, y));
}

}  // namespace eollw
