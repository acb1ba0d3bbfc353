#pragma once

// Fox-Wright function
//
//   pPsi_q(z) = sum_m [prod_i Gamma(a_i + alpha_i m) / prod_j Gamma(b_j + beta_j m)] z^m / m!
//
// for real parameters with alpha_i, beta_j > 0. Terms are formed in log space.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "evaluation.hpp"
#include "gamma.hpp"

namespace kstruve {

/// One (shift, scale) pair: Gamma(shift + scale * m).
template <class Real = double>
struct WrightParam {
  Real shift{};
  Real scale{1};
};

template <class Real = double>
struct WrightSpec {
  std::vector<WrightParam<Real>> upper;
  std::vector<WrightParam<Real>> lower;
};

inline constexpr std::size_t kWrightDefaultMaxTerms = 1000;

/// Lower-parameter arguments this close to a non-positive integer count as poles.
inline constexpr double kWrightPoleProximity = 1e-9;

/// sum_j beta_j - sum_i alpha_i; the series is entire when this exceeds -1.
template <class Real>
[[nodiscard]] Real convergence_index(const WrightSpec<Real>& spec) noexcept {
  Real index = 0;
  for (const auto& b : spec.lower) index += b.scale;
  for (const auto& a : spec.upper) index -= a.scale;
  return index;
}

namespace detail {

template <class Real>
[[nodiscard]] bool near_pole(Real x) noexcept {
  if (x > Real(kWrightPoleProximity)) return false;
  const Real nearest = std::nearbyint(x);
  return nearest <= 0 &&
         std::abs(x - nearest) <= Real(kWrightPoleProximity) * std::max(Real(1), std::abs(nearest));
}

template <class Real>
void validate_spec(const WrightSpec<Real>& spec) {
  const auto bad = [](const WrightParam<Real>& p) {
    return !std::isfinite(p.shift) || !std::isfinite(p.scale) || !(p.scale > 0);
  };
  if (std::any_of(spec.upper.begin(), spec.upper.end(), bad) ||
      std::any_of(spec.lower.begin(), spec.lower.end(), bad))
    throw DomainError("wright_eval: parameters must be finite with positive scales");
  if (!(convergence_index(spec) > -1))
    throw ConvergenceConditionError("wright_eval: convergence index must exceed -1");
}

/// Upper bound on sup_{j >= n} |t_{j+1} / t_j|, valid once every gamma
/// argument at index n is positive. Uses, for x > 0 and h > 0,
///   ln Gamma(x + h) - ln Gamma(x) <= h ln(x + h)
///   ln Gamma(x + h) - ln Gamma(x) >= h (ln x - 1/x).
/// Returns +inf where the bound is not yet available.
template <class Real>
[[nodiscard]] Real ratio_bound(const WrightSpec<Real>& spec, Real abs_z, std::size_t n) {
  if (n == 0) return std::numeric_limits<Real>::infinity();
  const Real m = Real(n);
  Real sum_upper = 0, sum_lower = 0;
  Real log_bound = std::log(abs_z);
  for (const auto& a : spec.upper) {
    if (!(a.shift + a.scale * m > 0)) return std::numeric_limits<Real>::infinity();
    sum_upper += a.scale;
    log_bound += a.scale * std::log(a.scale + std::max(a.shift, Real(0)) / (m + 1));
  }
  for (const auto& b : spec.lower) {
    const Real arg = b.shift + b.scale * m;
    if (!(arg > 0)) return std::numeric_limits<Real>::infinity();
    sum_lower += b.scale;
    log_bound += b.scale / arg;
    log_bound -= b.scale * std::log(b.scale + std::min(b.shift, Real(0)) / m);
  }
  log_bound += std::max(sum_upper - 1, Real(0)) * std::log1p(1 / m);
  log_bound += (sum_upper - 1 - sum_lower) * std::log(m);
  return std::exp(log_bound);
}

}  // namespace detail

template <class Real>
EvaluationResult<Real> wright_eval(const WrightSpec<Real>& spec, Real z, const SeriesOptions<Real>& opts) {
  detail::validate_spec(spec);
  if (!(opts.tolerance > 0)) throw DomainError("wright_eval: tolerance must be positive");
  if (!std::isfinite(z)) throw DomainError("wright_eval: z must be finite");

  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real abs_z = std::abs(z);
  const Real log_abs_z = z == 0 ? Real(0) : std::log(abs_z);
  const Real log_max = std::log(std::numeric_limits<Real>::max());
  const std::size_t max_terms = opts.max_terms.value_or(kWrightDefaultMaxTerms);

  detail::CompensatedSum<Real> sum;
  Real rounding = 0;
  for (std::size_t n = 0; n < max_terms; ++n) {
    const Real m = Real(n);
    Real log_term = 0;
    Real magnitude_of_logs = 0;
    int sign = (z < 0 && n % 2 == 1) ? -1 : 1;
    for (const auto& a : spec.upper) {
      const Real arg = a.shift + a.scale * m;
      if (detail::near_pole(arg)) {
        std::ostringstream msg;
        msg << "wright_eval: upper gamma pole at m = " << n;
        throw PoleError(msg.str());
      }
      const SignedLog<Real> lg = signed_log_gamma(arg);
      log_term += lg.log_abs;
      magnitude_of_logs += std::abs(lg.log_abs);
      sign *= lg.sign;
    }
    for (const auto& b : spec.lower) {
      const Real arg = b.shift + b.scale * m;
      if (detail::near_pole(arg)) {
        std::ostringstream msg;
        msg << "wright_eval: lower gamma pole at m = " << n << " (argument "
            << static_cast<double>(arg) << ")";
        throw PoleError(msg.str());
      }
      const SignedLog<Real> lg = signed_log_gamma(arg);
      log_term -= lg.log_abs;
      magnitude_of_logs += std::abs(lg.log_abs);
      sign *= lg.sign;
    }
    const Real log_factorial = log_gamma(m + 1);
    log_term += m * log_abs_z - log_factorial;
    magnitude_of_logs += std::abs(m * log_abs_z) + log_factorial;
    if (log_term > log_max) throw OverflowError("wright_eval: series term exceeds the representable range");
    const Real term = Real(sign) * std::exp(log_term);
    sum.add(term);
    rounding += std::abs(term) * eps * (4 + magnitude_of_logs);

    if (z == 0) return {sum.value(), rounding, 1};

    const Real rho = detail::ratio_bound(spec, abs_z, n);
    if (rho < 1) {
      const Real tail = std::abs(term) * rho / (1 - rho);
      const Real partial = sum.value();
      if (tail <= detail::stopping_target(opts, partial))
        return {partial, tail + rounding + 2 * eps * std::abs(partial), n + 1};
    }
  }
  std::ostringstream msg;
  msg << "wright_eval: tolerance not reached within " << max_terms << " terms";
  throw ConvergenceError(msg.str());
}

template <class Real>
EvaluationResult<Real> wright_eval(const WrightSpec<Real>& spec, Real z, Real tol,
                                   std::size_t max_terms = kWrightDefaultMaxTerms) {
  SeriesOptions<Real> opts;
  opts.tolerance = tol;
  opts.max_terms = max_terms;
  return wright_eval(spec, z, opts);
}

}  // namespace kstruve
