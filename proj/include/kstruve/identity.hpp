#pragma once

// Integral identities for the k-Struve function against Lavoie-Trottier weights.
//
// Theorem 1:  int_0^1 x^(a+mu-1) (1-x)^(2a-1) (1-x/3)^(2(a+mu)-1) (1-x/4)^(a-1)
//                     S^k_{nu,c}(y (1-x/4) (1-x)^2 / 2) dx
// Theorem 2:  int_0^1 x^(a-1) (1-x)^(2(a+mu)-1) (1-x/3)^(2a-1) (1-x/4)^(a+mu-1)
//                     S^k_{nu,c}(y x (1-x/3)^2 / 2) dx
//
// Each left-hand side is compared with two closed forms: the right-hand side
// as printed, and one re-derived by integrating the series term by term
// (see docs/derivation.md). With L = nu/k + 1 and the 2Psi3 spec
//   upper (a + L, 2), (1, 1);  lower (nu/k + 3/2, 1), (3/2, 1), (2a + mu + L, 2)
// the re-derived forms are
//   Theorem 1: Gamma(a+mu) (2/3)^(2(a+mu)) (y/4)^L k^-(nu/k+1/2) 2Psi3(-c y^2 / (16k))
//   Theorem 2: Gamma(a+mu) (2/3)^(2(a+L))  (y/4)^L k^-(nu/k+1/2) 2Psi3(-c y^2 / (81k))

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <limits>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "evaluation.hpp"
#include "gamma.hpp"
#include "identity_report.hpp"
#include "quadrature.hpp"
#include "struve.hpp"
#include "wright.hpp"

namespace kstruve {

enum class Identity { theorem1, theorem2, corollary1, corollary2 };

[[nodiscard]] constexpr std::string_view to_string(Identity id) noexcept {
  switch (id) {
    case Identity::theorem1: return "theorem1";
    case Identity::theorem2: return "theorem2";
    case Identity::corollary1: return "corollary1";
    case Identity::corollary2: return "corollary2";
  }
  return "theorem1";
}

struct VerifyOptions {
  double tol = 1e-10;         ///< relative quadrature tolerance; the integrand's series uses tol / 10
  double series_tol = 1e-12;  ///< relative tolerance of the Wright right-hand sides
  double threshold = 1e-6;    ///< decision threshold on relative deviations
  bool strict = true;         ///< enforce nu > 3k/2
  unsigned threads = 0;       ///< verify_grid workers; 0 = hardware concurrency
};

/// Checks the hypotheses; returns whether the strict nu > 3k/2 condition holds.
inline bool validate(const TheoremParams& p, bool strict) {
  for (double v : {p.alpha, p.mu, p.nu, p.c, p.k, p.y})
    if (!std::isfinite(v)) throw DomainError("theorem parameters must be finite");
  if (!(p.k > 0)) throw DomainError("theorem parameters: k must be positive");
  if (!(p.alpha + p.mu > 0)) throw DomainError("theorem parameters: requires alpha + mu > 0");
  if (!(p.alpha + p.nu / p.k + 1 > 0)) throw DomainError("theorem parameters: requires alpha + nu/k + 1 > 0");
  const bool strict_ok = p.nu > 1.5 * p.k;
  if (strict && !strict_ok) throw DomainError("theorem parameters: requires nu > 3k/2 (use relaxed mode)");
  if (!(p.nu > -1.5 * p.k)) throw DomainError("theorem parameters: requires nu > -3k/2");
  return strict_ok;
}

namespace detail {

[[nodiscard]] inline double struve_at(const TheoremParams& p, double arg, double tol) {
  SeriesOptions<double> opts;
  opts.tolerance = tol;
  opts.mode = ToleranceMode::relative;
  return k_struve(StruveParams<double>{p.nu, p.c, p.k}, arg, opts).value;
}

[[nodiscard]] inline double theorem1_integrand(const TheoremParams& p, double x, double xc, double tol) {
  const double a = p.alpha, s = p.alpha + p.mu;
  const double weight = std::pow(x, s - 1) * std::pow(xc, 2 * a - 1) * std::pow(1 - x / 3, 2 * s - 1) *
                        std::pow(1 - x / 4, a - 1);
  if (weight == 0 || p.y == 0) return 0;
  return weight * struve_at(p, p.y * (1 - x / 4) * xc * xc / 2, tol);
}

[[nodiscard]] inline double theorem2_integrand(const TheoremParams& p, double x, double xc, double tol) {
  const double a = p.alpha, s = p.alpha + p.mu;
  const double weight = std::pow(x, a - 1) * std::pow(xc, 2 * s - 1) * std::pow(1 - x / 3, 2 * a - 1) *
                        std::pow(1 - x / 4, s - 1);
  if (weight == 0 || p.y == 0) return 0;
  const double g = 1 - x / 3;
  return weight * struve_at(p, p.y * x * g * g / 2, tol);
}

template <class Integrand>
QuadratureResult integrate_lhs(Integrand integrand, double left_exponent, double right_exponent, double tol) {
  QuadratureOptions opts;
  opts.tolerance = tol;
  opts.method = select_method(left_exponent, right_exponent);
  opts.on_failure = OnFailure::report;
  return integrate(integrand, opts);
}

[[nodiscard]] inline double wright_value(const WrightSpec<double>& spec, double z, double tol) {
  SeriesOptions<double> opts;
  opts.tolerance = tol;
  opts.mode = ToleranceMode::relative;
  return wright_eval(spec, z, opts).value;
}

// Real power that also accepts a negative base with an integer exponent.
[[nodiscard]] inline double signed_pow(double base, double exponent) {
  if (base < 0 && exponent != std::nearbyint(exponent))
    throw DomainError("negative y requires an integer nu/k + 1");
  return std::pow(base, exponent);
}

}  // namespace detail

/// 2Psi3 spec shared by the re-derived right-hand sides.
[[nodiscard]] inline WrightSpec<double> corrected_wright_spec(const TheoremParams& p) {
  const double order = p.nu / p.k;
  return {{{p.alpha + order + 1, 2}, {1, 1}},
          {{order + 1.5, 1}, {1.5, 1}, {2 * p.alpha + p.mu + order + 1, 2}}};
}

/// 2Psi3 spec as printed: the last lower shift lacks the +1.
[[nodiscard]] inline WrightSpec<double> printed_wright_spec(const TheoremParams& p) {
  const double order = p.nu / p.k;
  return {{{p.alpha + order + 1, 2}, {1, 1}},
          {{order + 1.5, 1}, {1.5, 1}, {2 * p.alpha + order + p.mu, 2}}};
}

inline double theorem1_integrand(const TheoremParams& p, double x, double tol) {
  return detail::theorem1_integrand(p, x, 1 - x, tol / 10);
}

inline double theorem2_integrand(const TheoremParams& p, double x, double tol) {
  return detail::theorem2_integrand(p, x, 1 - x, tol / 10);
}

inline QuadratureResult theorem1_lhs(const TheoremParams& p, double tol) {
  const double inner = tol / 10;
  return detail::integrate_lhs(
      [&p, inner](double x, double xc) { return detail::theorem1_integrand(p, x, xc, inner); },
      p.alpha + p.mu - 1, 2 * p.alpha - 1, tol);
}

inline QuadratureResult theorem2_lhs(const TheoremParams& p, double tol) {
  const double inner = tol / 10;
  return detail::integrate_lhs(
      [&p, inner](double x, double xc) { return detail::theorem2_integrand(p, x, xc, inner); },
      p.alpha - 1, 2 * (p.alpha + p.mu) - 1, tol);
}

inline double theorem1_rhs_paper(const TheoremParams& p, double tol) {
  const double order = p.nu / p.k;
  const double pre = detail::signed_pow(p.y / 2, order + 1) * gamma(p.alpha + p.mu) *
                     std::pow(2.0 / 3.0, 2 * (p.alpha + p.mu)) / std::pow(p.k, order);
  if (pre == 0) return 0;
  return pre * detail::wright_value(printed_wright_spec(p), -p.c * p.y * p.y / (4 * p.k), tol);
}

inline double theorem1_rhs_corrected(const TheoremParams& p, double tol) {
  const double order = p.nu / p.k;
  const double pre = gamma(p.alpha + p.mu) * std::pow(2.0 / 3.0, 2 * (p.alpha + p.mu)) *
                     detail::signed_pow(p.y / 4, order + 1) * std::pow(p.k, -(order + 0.5));
  if (pre == 0) return 0;
  return pre * detail::wright_value(corrected_wright_spec(p), -p.c * p.y * p.y / (16 * p.k), tol);
}

inline double theorem2_rhs_paper(const TheoremParams& p, double tol) {
  const double order = p.nu / p.k;
  const double pre = detail::signed_pow(p.y / 2, order + 1) * gamma(p.alpha + p.mu) *
                     std::pow(2.0 / 3.0, 2 * p.alpha) / (std::pow(p.k, order) * std::pow(3.0, 2 * order + 2));
  if (pre == 0) return 0;
  return pre * detail::wright_value(printed_wright_spec(p), -p.c * p.y * p.y / (4 * p.k), tol);
}

/// Argument of the re-derived Theorem 2 series: (2/3)^4 (y/4)^2 (-c/k).
[[nodiscard]] inline double theorem2_corrected_argument(const TheoremParams& p) noexcept {
  return -p.c * p.y * p.y / (81 * p.k);
}

inline double theorem2_rhs_corrected(const TheoremParams& p, double tol) {
  const double order = p.nu / p.k;
  const double pre = gamma(p.alpha + p.mu) * std::pow(2.0 / 3.0, 2 * (p.alpha + order + 1)) *
                     detail::signed_pow(p.y / 4, order + 1) * std::pow(p.k, -(order + 0.5));
  if (pre == 0) return 0;
  return pre * detail::wright_value(corrected_wright_spec(p), theorem2_corrected_argument(p), tol);
}

namespace detail {

inline IdentityReport verify_theorem(bool first, std::string_view label, const TheoremParams& p,
                                     const VerifyOptions& opts) {
  IdentityReport report;
  report.identity = std::string(label);
  report.params = p;
  report.strict_hypotheses = validate(p, opts.strict);
  const QuadratureResult lhs = first ? theorem1_lhs(p, opts.tol) : theorem2_lhs(p, opts.tol);
  report.lhs_value = lhs.value;
  report.lhs_error_estimate = lhs.error_estimate;
  report.rhs_paper = first ? theorem1_rhs_paper(p, opts.series_tol) : theorem2_rhs_paper(p, opts.series_tol);
  report.rhs_corrected =
      first ? theorem1_rhs_corrected(p, opts.series_tol) : theorem2_rhs_corrected(p, opts.series_tol);
  report.rel_dev_paper = relative_deviation(lhs.value, report.rhs_paper);
  report.rel_dev_corrected = relative_deviation(lhs.value, report.rhs_corrected);
  report.verdict = adjudicate(lhs.value, lhs.error_estimate, lhs.converged, report.rel_dev_paper,
                              report.rel_dev_corrected, opts.threshold);
  return report;
}

}  // namespace detail

/// Theorem 1 at c = k = 1, i.e. with the Struve function H_nu.
inline IdentityReport corollary_struve(double alpha, double mu, double nu, double y,
                                       const VerifyOptions& opts = {}) {
  return detail::verify_theorem(true, "corollary1", TheoremParams{alpha, mu, nu, 1, 1, y}, opts);
}

/// Theorem 2 at c = -1, k = 1, i.e. with the modified Struve function L_nu.
inline IdentityReport corollary_modified(double alpha, double mu, double nu, double y,
                                         const VerifyOptions& opts = {}) {
  return detail::verify_theorem(false, "corollary2", TheoremParams{alpha, mu, nu, -1, 1, y}, opts);
}

/// For the corollaries the c and k fields of `p` are ignored.
inline IdentityReport verify(Identity which, const TheoremParams& p, const VerifyOptions& opts = {}) {
  switch (which) {
    case Identity::theorem1: return detail::verify_theorem(true, "theorem1", p, opts);
    case Identity::theorem2: return detail::verify_theorem(false, "theorem2", p, opts);
    case Identity::corollary1: return corollary_struve(p.alpha, p.mu, p.nu, p.y, opts);
    case Identity::corollary2: return corollary_modified(p.alpha, p.mu, p.nu, p.y, opts);
  }
  throw DomainError("unknown identity");
}

/// Report for a point that raised instead of producing values.
[[nodiscard]] inline IdentityReport failed_report(std::string identity,
                                                  std::variant<TheoremParams, LavoieParams> params,
                                                  std::string error) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  IdentityReport report;
  report.identity = std::move(identity);
  report.params = params;
  report.lhs_value = report.lhs_error_estimate = nan;
  report.rhs_paper = report.rhs_corrected = nan;
  report.rel_dev_paper = report.rel_dev_corrected = nan;
  report.verdict = Verdict::inconclusive;
  report.error = std::move(error);
  return report;
}

/// One report per grid point, in input order. Points are evaluated in
/// parallel; a point that raises yields an INCONCLUSIVE report carrying the
/// error message instead of aborting the batch.
inline std::vector<IdentityReport> verify_grid(Identity which, const std::vector<TheoremParams>& grid,
                                               const VerifyOptions& opts = {}) {
  std::vector<IdentityReport> reports(grid.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        reports[i] = verify(which, grid[i], opts);
      } catch (const std::exception& e) {
        TheoremParams p = grid[i];
        if (which == Identity::corollary1) p.c = p.k = 1;
        if (which == Identity::corollary2) p.c = -1, p.k = 1;
        reports[i] = failed_report(std::string(to_string(which)), p, e.what());
      }
    }
  };
  unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, grid.size()));
  if (workers <= 1) {
    work();
    return reports;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  pool.clear();
  return reports;
}

/// 24 strict points: alpha in {0.5, 2}, mu in {0.25, 1}, k in {0.5, 1, 2},
/// nu = 3k/2 + {0.5, 1.5}, c = 1, y = 1.
[[nodiscard]] inline std::vector<TheoremParams> default_theorem_grid() {
  std::vector<TheoremParams> grid;
  for (double alpha : {0.5, 2.0})
    for (double mu : {0.25, 1.0})
      for (double k : {0.5, 1.0, 2.0})
        for (double offset : {0.5, 1.5}) grid.push_back({alpha, mu, 1.5 * k + offset, 1.0, k, 1.0});
  return grid;
}

/// 6 points for the corollaries: alpha in {0.5, 1, 2}, nu in {2, 3}, mu = 0.5, y = 1.
[[nodiscard]] inline std::vector<TheoremParams> default_corollary_grid(Identity which) {
  const double c = which == Identity::corollary2 ? -1.0 : 1.0;
  std::vector<TheoremParams> grid;
  for (double alpha : {0.5, 1.0, 2.0})
    for (double nu : {2.0, 3.0}) grid.push_back({alpha, 0.5, nu, c, 1.0, 1.0});
  return grid;
}

[[nodiscard]] inline std::vector<TheoremParams> default_grid(Identity which) {
  return which == Identity::theorem1 || which == Identity::theorem2 ? default_theorem_grid()
                                                                   : default_corollary_grid(which);
}

}  // namespace kstruve
