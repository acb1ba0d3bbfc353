#pragma once

// int_0^1 x^(a-1) (1-x)^(2b-1) (1-x/3)^(2a-1) (1-x/4)^(b-1) dx
//   = (2/3)^(2a) Gamma(a) Gamma(b) / Gamma(a+b),   a, b > 0.

#include <cmath>

#include "errors.hpp"
#include "gamma.hpp"
#include "identity_report.hpp"
#include "quadrature.hpp"

namespace kstruve {

[[nodiscard]] inline double lavoie_trottier_rhs(double alpha, double beta) {
  if (!(alpha > 0) || !(beta > 0)) throw DomainError("lavoie_trottier: alpha and beta must be positive");
  return std::exp(2 * alpha * std::log(2.0 / 3.0) + log_gamma(alpha) + log_gamma(beta) -
                  log_gamma(alpha + beta));
}

[[nodiscard]] inline double lavoie_trottier_weight(double alpha, double beta, double x, double xc) {
  return std::pow(x, alpha - 1) * std::pow(xc, 2 * beta - 1) * std::pow(1 - x / 3, 2 * alpha - 1) *
         std::pow(1 - x / 4, beta - 1);
}

[[nodiscard]] inline QuadratureResult lavoie_trottier_lhs(double alpha, double beta, double tol) {
  if (!(alpha > 0) || !(beta > 0)) throw DomainError("lavoie_trottier: alpha and beta must be positive");
  QuadratureOptions opts;
  opts.tolerance = tol;
  opts.method = select_method(alpha - 1, 2 * beta - 1);
  opts.on_failure = OnFailure::report;
  return integrate([=](double x, double xc) { return lavoie_trottier_weight(alpha, beta, x, xc); }, opts);
}

[[nodiscard]] inline IdentityReport lavoie_trottier_check(double alpha, double beta, double tol,
                                                          double threshold = 1e-6) {
  const QuadratureResult lhs = lavoie_trottier_lhs(alpha, beta, tol);
  const double rhs = lavoie_trottier_rhs(alpha, beta);
  IdentityReport report;
  report.identity = "lavoie";
  report.params = LavoieParams{alpha, beta};
  report.lhs_value = lhs.value;
  report.lhs_error_estimate = lhs.error_estimate;
  report.rhs_paper = rhs;
  report.rhs_corrected = rhs;
  report.rel_dev_paper = report.rel_dev_corrected = relative_deviation(lhs.value, rhs);
  if (!lhs.converged || lhs.error_estimate > threshold * std::abs(lhs.value))
    report.verdict = Verdict::inconclusive;
  else
    report.verdict = report.rel_dev_paper <= threshold ? Verdict::confirmed : Verdict::refuted;
  report.strict_hypotheses = true;
  return report;
}

}  // namespace kstruve
