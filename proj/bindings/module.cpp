// Python module exposing the main operations: the two distributions, the
// shape report, synthetic-replicate generation and regression fitting.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "eollw/diagnostics.hpp"
#include "eollw/eollw.hpp"
#include "eollw/mcstudy.hpp"
#include "eollw/regression.hpp"
#include "eollw/shape.hpp"

namespace py = pybind11;

namespace {

py::dict fit_to_dict(const eollw::FitResult& fit, const eollw::CensoredDataset& data) {
  py::dict out;
  out["family"] = eollw::to_string(fit.spec.family);
  out["converged"] = fit.converged;
  out["iterations"] = fit.iterations;
  out["loglik"] = fit.loglik;
  out["gradient_norm"] = fit.gradient_norm;
  out["parameter_names"] = fit.parameter_names;
  out["estimates"] = fit.theta;
  if (fit.standard_errors) {
    out["standard_errors"] = *fit.standard_errors;
  } else {
    out["standard_errors"] = py::none();
    out["se_note"] = fit.se_note;
  }
  const auto [aic, bic, caic] =
      eollw::information_criteria(fit.loglik, fit.n_parameters(), fit.n_rows);
  out["aic"] = aic;
  out["bic"] = bic;
  out["caic"] = caic;
  out["a"] = fit.shape_a();
  out["b"] = fit.shape_b();
  const Eigen::VectorXd rm = eollw::martingale_residuals(fit, data);
  out["martingale_residuals"] = rm;
  out["deviance_residuals"] = eollw::deviance_residuals(rm, data.status);
  return out;
}

}  // namespace

PYBIND11_MODULE(_eollw, m) {
  m.doc() = "Two-shape lifetime family: distributions, shape analysis, "
            "censored regression and simulation";

  py::class_<eollw::Eollw>(m, "EollwDist")
      .def(py::init([](double a, double b, double alpha, double lambda) {
             return eollw::Eollw({a, b, alpha, lambda});
           }),
           py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("lambda_"))
      .def("pdf", &eollw::Eollw::pdf, py::arg("x"))
      .def("log_pdf", &eollw::Eollw::log_pdf, py::arg("x"))
      .def("cdf", &eollw::Eollw::cdf, py::arg("x"))
      .def("survival", &eollw::Eollw::survival, py::arg("x"))
      .def("log_survival", &eollw::Eollw::log_survival, py::arg("x"))
      .def("hazard", &eollw::Eollw::hazard, py::arg("x"))
      .def("quantile", &eollw::Eollw::quantile, py::arg("u"))
      .def("sample", &eollw::Eollw::sample, py::arg("n"), py::arg("seed"));

  py::class_<eollw::Leollw>(m, "LeollwDist")
      .def(py::init([](double mu, double sigma, double a, double b) {
             return eollw::Leollw({mu, sigma, a, b});
           }),
           py::arg("mu"), py::arg("sigma"), py::arg("a"), py::arg("b"))
      .def("pdf", &eollw::Leollw::pdf, py::arg("y"))
      .def("log_pdf", &eollw::Leollw::log_pdf, py::arg("y"))
      .def("cdf", &eollw::Leollw::cdf, py::arg("y"))
      .def("survival", &eollw::Leollw::survival, py::arg("y"))
      .def("log_survival", &eollw::Leollw::log_survival, py::arg("y"))
      .def("quantile", &eollw::Leollw::quantile, py::arg("u"))
      .def("sample", &eollw::Leollw::sample, py::arg("n"), py::arg("seed"));

  m.def(
      "shape_report",
      [](double a, double b, double alpha, double lambda) {
        const eollw::EollwParams p{a, b, alpha, lambda};
        p.validate();
        const eollw::ShapeReport r = eollw::shape_report(p);
        py::dict out;
        out["density_class"] = eollw::to_string(r.density_class);
        out["density_theorem_backed"] = r.density_theorem_backed;
        out["density_critical_points"] = r.density_critical_points;
        out["hazard_class"] = eollw::to_string(r.hazard_class);
        out["hazard_theorem_backed"] = r.hazard_theorem_backed;
        out["tail_class"] = eollw::to_string(r.tail_class);
        out["logtime_critical_points"] = eollw::leollw_critical_points(a, b);
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("lambda_"),
      "Density/hazard/tail classification with interior critical points");

  m.def(
      "generate_replicate",
      [](std::size_t n, double censoring_target, std::uint64_t seed,
         double beta10, double beta11, double beta12, double sigma, double a,
         double b) {
        eollw::SimConfig config;
        config.n = n;
        config.censoring_target = censoring_target;
        config.seed = seed;
        config.beta10 = beta10;
        config.beta11 = beta11;
        config.beta12 = beta12;
        config.sigma = sigma;
        config.a = a;
        config.b = b;
        config.validate();
        const eollw::CensoredDataset data = eollw::generate_replicate(config, seed);
        py::dict out;
        out["response"] = data.response;
        out["status"] = data.status;
        out["covariates"] = data.covariates;
        out["covariate_names"] = data.covariate_names;
        return out;
      },
      py::arg("n"), py::arg("censoring_target") = 0.0,
      py::arg("seed") = 20260822, py::arg("beta10") = 3.0,
      py::arg("beta11") = 2.5, py::arg("beta12") = 1.9, py::arg("sigma") = 0.3,
      py::arg("a") = 0.5, py::arg("b") = 0.9,
      "One synthetic right-censored regression dataset");

  m.def(
      "fit",
      [](const Eigen::VectorXd& response, const Eigen::VectorXd& status,
         const Eigen::MatrixXd& covariates, const std::string& family,
         std::optional<std::vector<std::size_t>> mu_columns,
         std::vector<std::size_t> sigma_columns) {
        eollw::CensoredDataset data;
        data.response = response;
        data.status = status;
        data.covariates = covariates;
        for (Eigen::Index j = 0; j < covariates.cols(); ++j) {
          data.covariate_names.push_back("x" + std::to_string(j + 1));
        }
        eollw::ModelSpec spec;
        spec.family = eollw::family_from_string(family);
        if (mu_columns) {
          spec.mu_columns = *mu_columns;
        } else {
          for (Eigen::Index j = 0; j < covariates.cols(); ++j) {
            spec.mu_columns.push_back(static_cast<std::size_t>(j));
          }
        }
        spec.sigma_columns = std::move(sigma_columns);
        const eollw::FitResult fit = eollw::fit(spec, data);
        return fit_to_dict(fit, data);
      },
      py::arg("response"), py::arg("status"), py::arg("covariates"),
      py::arg("family") = "leollw", py::arg("mu_columns") = py::none(),
      py::arg("sigma_columns") = std::vector<std::size_t>{},
      "Censored location-scale fit by maximum likelihood; returns a dict "
      "with estimates, standard errors, criteria and residuals");
}
