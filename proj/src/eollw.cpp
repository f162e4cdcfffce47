#include "eollw/eollw.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "eollw/rng.hpp"

namespace eollw {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_positive_finite(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) +
                                " must be a positive finite number");
  }
}
}  // namespace

void EollwParams::validate() const {
  check_positive_finite(a, "shape a");
  check_positive_finite(b, "shape b");
  check_positive_finite(alpha, "weibull shape alpha");
  check_positive_finite(lambda, "weibull scale lambda");
}

void LeollwParams::validate() const {
  if (!std::isfinite(mu)) throw std::invalid_argument("location mu must be finite");
  check_positive_finite(sigma, "scale sigma");
  check_positive_finite(a, "shape a");
  check_positive_finite(b, "shape b");
}

namespace detail {

LifetimeTerms lifetime_terms(double z, double a, double b, bool need_grad) {
  LifetimeTerms t{};
  const double zc = z < kMaxExpArg ? z : kMaxExpArg;
  const double w = std::exp(zc);
  // u = log G(z) for the extreme-value baseline; finite even when w
  // underflows (u ~ z there).
  const double u = log_cdf_from_log_w(zc);
  const double d = a * (-w - u);          // a*(log(1-G) - log G)
  const double lp = log1pexp(d);
  const double log_den = a * u + lp;      // log(G^a + (1-G)^a)
  const double m = -b * lp;               // log cdf, <= 0

  t.log_pdf = std::log(a) + std::log(b) + zc - a * w +
              (a * b - 1.0) * u - (b + 1.0) * log_den;
  t.log_cdf = m;
  // Right-tail switch: once 1 - F is below double resolution, use the
  // expansion S ~ b*exp(d) instead of log1mexp(m).
  t.log_sf = m < -1e-300 ? log1mexp(m) : std::log(b) + d;

  if (!need_grad) return t;

  const double du_dz = std::exp(zc - w - u);  // d(log G)/dz, exact in both tails
  const double p_lead = expit(-d);            // G^a / (G^a + (1-G)^a)
  const double q_lead = expit(d);
  const double dden_dz = a * (p_lead * du_dz - q_lead * w);
  const double dden_da = p_lead * u - q_lead * w;  // d(log_den)/da

  t.df_dz = 1.0 - a * w + (a * b - 1.0) * du_dz - (b + 1.0) * dden_dz;
  t.df_da = 1.0 / a - w + b * u - (b + 1.0) * dden_da;
  t.df_db = 1.0 / b + a * u - log_den;

  if (m > -1e-8) {
    // Deep right tail: log S = log b + d + O(e^d); differentiate that.
    t.ds_dz = -a * (w + du_dz);
    t.ds_da = -w - u;
    t.ds_db = 1.0 / b;
  } else {
    const double ratio = std::exp(m - t.log_sf);  // F / S
    t.ds_dz = -ratio * b * (a * du_dz - dden_dz);
    t.ds_da = -ratio * b * (u - dden_da);
    t.ds_db = -ratio * (-lp);
  }
  return t;
}

}  // namespace detail

Eollw::Eollw(const EollwParams& p) : p_(p) {
  p_.validate();
  log_lambda_ = std::log(p_.lambda);
}

// The time-scale distribution is the log-time one evaluated at z =
// alpha*(log x - log lambda), i.e. location log lambda and scale 1/alpha.
double Eollw::log_pdf(double x) const {
  if (!(x > 0.0)) throw std::domain_error("log_pdf: x must be positive");
  const double z = p_.alpha * (std::log(x) - log_lambda_);
  const auto t = detail::lifetime_terms(z, p_.a, p_.b, false);
  // Jacobian dz/dx = alpha / x
  return t.log_pdf + std::log(p_.alpha) - std::log(x);
}

double Eollw::pdf(double x) const { return std::exp(log_pdf(x)); }

double Eollw::log_cdf(double x) const {
  if (std::isnan(x)) return x;
  if (x <= 0.0) return -kInf;
  const double z = p_.alpha * (std::log(x) - log_lambda_);
  return detail::lifetime_terms(z, p_.a, p_.b, false).log_cdf;
}

double Eollw::cdf(double x) const { return std::exp(log_cdf(x)); }

double Eollw::survival(double x) const { return -std::expm1(log_cdf(x)); }

double Eollw::log_survival(double x) const {
  if (std::isnan(x)) return x;
  if (x <= 0.0) return 0.0;
  const double z = p_.alpha * (std::log(x) - log_lambda_);
  return detail::lifetime_terms(z, p_.a, p_.b, false).log_sf;
}

double Eollw::hazard(double x) const {
  if (!(x > 0.0)) return 0.0;
  const double z = p_.alpha * (std::log(x) - log_lambda_);
  const auto t = detail::lifetime_terms(z, p_.a, p_.b, false);
  if (t.log_sf == -kInf) return kInf;
  return std::exp(t.log_pdf + std::log(p_.alpha) - std::log(x) - t.log_sf);
}

double Eollw::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("quantile: u must lie strictly inside (0, 1)");
  }
  u = std::min(std::max(u, 1e-15), 1.0 - 1e-15);
  // Baseline argument w* = expit(s); the Weibull quantile needs
  // -log(1 - w*), which is exactly log1pexp(s) -- no cancellation.
  const double log_t1 = std::log(u) / (p_.a * p_.b);
  const double log_t2 = log1mexp(std::log(u) / p_.b) / p_.a;
  return p_.lambda * std::pow(log1pexp(log_t1 - log_t2), 1.0 / p_.alpha);
}

std::vector<double> Eollw::sample(std::size_t n, std::uint64_t seed) const {
  if (n < 1) throw std::invalid_argument("sample: need n >= 1");
  CounterRng rng(seed);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = quantile(rng.uniform());
  return out;
}

Leollw::Leollw(const LeollwParams& p) : p_(p) { p_.validate(); }

double Leollw::log_pdf(double y) const {
  if (std::isnan(y)) throw std::domain_error("log_pdf: y is NaN");
  const double z = (y - p_.mu) / p_.sigma;
  return detail::lifetime_terms(z, p_.a, p_.b, false).log_pdf -
         std::log(p_.sigma);
}

double Leollw::pdf(double y) const { return std::exp(log_pdf(y)); }

double Leollw::log_cdf(double y) const {
  if (std::isnan(y)) return y;
  const double z = (y - p_.mu) / p_.sigma;
  return detail::lifetime_terms(z, p_.a, p_.b, false).log_cdf;
}

double Leollw::cdf(double y) const { return std::exp(log_cdf(y)); }

double Leollw::survival(double y) const { return -std::expm1(log_cdf(y)); }

double Leollw::log_survival(double y) const {
  if (std::isnan(y)) return y;
  const double z = (y - p_.mu) / p_.sigma;
  return detail::lifetime_terms(z, p_.a, p_.b, false).log_sf;
}

double Leollw::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("quantile: u must lie strictly inside (0, 1)");
  }
  u = std::min(std::max(u, 1e-15), 1.0 - 1e-15);
  const double log_t1 = std::log(u) / (p_.a * p_.b);
  const double log_t2 = log1mexp(std::log(u) / p_.b) / p_.a;
  return p_.mu + p_.sigma * std::log(log1pexp(log_t1 - log_t2));
}

double Leollw::quantile_via_representation(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("quantile: u must lie strictly inside (0, 1)");
  }
  u = std::min(std::max(u, 1e-15), 1.0 - 1e-15);
  const RepresentationVariate rep{p_.a, p_.b};
  return p_.mu + p_.sigma * std::log(std::log1p(rep.quantile(u)));
}

std::vector<double> Leollw::sample(std::size_t n, std::uint64_t seed) const {
  if (n < 1) throw std::invalid_argument("sample: need n >= 1");
  CounterRng rng(seed);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = quantile(rng.uniform());
  return out;
}

double leollw_standardized_pdf(double z, double a, double b) {
  check_positive_finite(a, "shape a");
  check_positive_finite(b, "shape b");
  return std::exp(detail::lifetime_terms(z, a, b, false).log_pdf);
}

namespace {
// Latent-representation plumbing: the monotone change of variable maps u to
// a baseline value G with 1 - G = (1-u)^(1/a), so the two baseline-style
// logs feeding the generator algebra are log G and log(1-u)/a. The
// Jacobian's powers of (1-u) cancel exactly, leaving density
// b * G^(ab-1) / (G^a + (1-G)^a)^(b+1).
struct LatentLogs {
  double log_lead;   // log G
  double log_trail;  // log(1 - G)
};

LatentLogs latent_logs(double u, double a) {
  LatentLogs l;
  l.log_trail = std::log1p(-u) / a;
  l.log_lead = log1mexp(l.log_trail);
  return l;
}
}  // namespace

double leollw_latent_pdf(double u, double a, double b) {
  check_positive_finite(a, "shape a");
  check_positive_finite(b, "shape b");
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("latent pdf: u must lie strictly inside (0, 1)");
  }
  const auto l = latent_logs(u, a);
  const auto core = detail::gen_core(l.log_lead, l.log_trail, a, b);
  return std::exp(std::log(b) + (a * b - 1.0) * l.log_lead -
                  (b + 1.0) * core.log_den);
}

double leollw_latent_cdf(double u, double a, double b) {
  check_positive_finite(a, "shape a");
  check_positive_finite(b, "shape b");
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("latent cdf: u must lie strictly inside (0, 1)");
  }
  const auto l = latent_logs(u, a);
  return std::exp(detail::gen_core(l.log_lead, l.log_trail, a, b).log_cdf);
}

double leollw_latent_map(double z, double a) {
  check_positive_finite(a, "shape a");
  const double zc = z < kMaxExpArg ? z : kMaxExpArg;
  return -std::expm1(-a * std::exp(zc));
}

}  // namespace eollw
