#pragma once

// Generalized k-Struve function
//
//   S^k_{nu,c}(x) = sum_r (-c)^r (x/2)^(2r + nu/k + 1) / [Gamma_k(rk + nu + 3k/2) Gamma(r + 3/2)]
//
// and its c = k = 1 (Struve H) and c = -1, k = 1 (modified Struve L) cases.

#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "errors.hpp"
#include "evaluation.hpp"
#include "gamma.hpp"

namespace kstruve {

template <class Real = double>
struct StruveParams {
  Real nu{};
  Real c{};
  Real k{1};
};

inline constexpr std::size_t kStruveDefaultMaxTerms = 500;

template <class Real>
void validate(const StruveParams<Real>& p) {
  if (!std::isfinite(p.nu) || !std::isfinite(p.c) || !std::isfinite(p.k))
    throw DomainError("k_struve: parameters must be finite");
  if (!(p.k > 0)) throw DomainError("k_struve: k must be positive");
  if (!(p.nu > Real(-1.5) * p.k)) throw DomainError("k_struve: requires nu > -3k/2");
}

template <class Real>
EvaluationResult<Real> k_struve(const StruveParams<Real>& p, Real x, const SeriesOptions<Real>& opts) {
  validate(p);
  if (!(opts.tolerance > 0)) throw DomainError("k_struve: tolerance must be positive");
  if (!std::isfinite(x)) throw DomainError("k_struve: x must be finite");

  const Real order = p.nu / p.k;  // nu/k
  const Real power = order + 1;   // exponent of the leading (x/2)
  const bool integer_power = power == std::nearbyint(power);
  if (x < 0 && !integer_power)
    throw DomainError("k_struve: negative x needs an integer exponent nu/k + 1");

  const Real log_denominator = signed_log_k_gamma(p.nu + Real(1.5) * p.k, p.k).log_abs +
                               std::log(boost::math::constants::root_pi<Real>() / 2);
  if (x == 0) {
    if (power > 0) return {Real(0), Real(0), 0};
    if (power < 0) throw DomainError("k_struve: singular at x = 0 for nu < -k");
    return {std::exp(-log_denominator), Real(0), 1};
  }

  const Real half = x / 2;
  const Real log_first = power * std::log(std::abs(half)) - log_denominator;
  Real term = std::exp(log_first);
  if (x < 0 && std::fmod(power, Real(2)) != 0) term = -term;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real first_relative_error = eps * (4 + std::abs(power * std::log(std::abs(half))) +
                                           std::abs(log_denominator));
  const Real step = -p.c * half * half / p.k;
  const std::size_t max_terms = opts.max_terms.value_or(kStruveDefaultMaxTerms);

  detail::CompensatedSum<Real> sum;
  Real rounding = 0;
  for (std::size_t r = 0; r < max_terms; ++r) {
    sum.add(term);
    rounding += std::abs(term) * (first_relative_error + 5 * eps * Real(r));
    const Real rr = Real(r);
    const Real ratio = step / ((rr + order + Real(1.5)) * (rr + Real(1.5)));
    const Real rho = std::abs(ratio);
    // |ratio| decreases in r, so rho bounds every later ratio.
    if (rho < 1) {
      const Real tail = std::abs(term) * rho / (1 - rho);
      const Real partial = sum.value();
      if (tail <= detail::stopping_target(opts, partial)) {
        return {partial, tail + rounding + 2 * eps * std::abs(partial), r + 1};
      }
    }
    term *= ratio;
  }
  std::ostringstream msg;
  msg << "k_struve: tolerance not reached within " << max_terms << " terms at x = "
      << static_cast<double>(x);
  throw ConvergenceError(msg.str());
}

template <class Real>
EvaluationResult<Real> k_struve(const StruveParams<Real>& p, Real x, Real tol) {
  SeriesOptions<Real> opts;
  opts.tolerance = tol;
  return k_struve(p, x, opts);
}

/// Struve H_nu, the c = k = 1 case.
template <class Real>
EvaluationResult<Real> struve_h(Real nu, Real x, const SeriesOptions<Real>& opts) {
  return k_struve(StruveParams<Real>{nu, Real(1), Real(1)}, x, opts);
}

template <class Real>
EvaluationResult<Real> struve_h(Real nu, Real x, Real tol) {
  return k_struve(StruveParams<Real>{nu, Real(1), Real(1)}, x, tol);
}

/// Modified Struve L_nu, the c = -1, k = 1 case.
template <class Real>
EvaluationResult<Real> struve_l(Real nu, Real x, const SeriesOptions<Real>& opts) {
  return k_struve(StruveParams<Real>{nu, Real(-1), Real(1)}, x, opts);
}

template <class Real>
EvaluationResult<Real> struve_l(Real nu, Real x, Real tol) {
  return k_struve(StruveParams<Real>{nu, Real(-1), Real(1)}, x, tol);
}

/// |x^2 y'' + x y' + (x^2 - nu^2) y - 4 (x/2)^(nu+1) / (sqrt(pi) Gamma(nu + 1/2))|
/// with y = H_nu and central differences of spacing `step`.
///
/// H_nu is sampled in long double: the second difference divides rounding
/// noise by step^2, which in double swamps the residual for step ~ 1e-4.
template <class Real>
Real struve_ode_residual(Real nu, Real x, Real step, Real tol) {
  if (!(step > 0)) throw DomainError("struve_ode_residual: step must be positive");
  if (!(x > 2 * step)) throw DomainError("struve_ode_residual: requires x > 2 * step");
  if (!(nu > Real(-1.5))) throw DomainError("struve_ode_residual: requires nu > -3/2");

  using Wide = long double;
  SeriesOptions<Wide> opts;
  opts.tolerance = std::min<Wide>(Wide(tol), Wide(1e-18));
  const Wide n = nu, xx = x, h = step;
  const Wide below = struve_h(n, xx - h, opts).value;
  const Wide at = struve_h(n, xx, opts).value;
  const Wide above = struve_h(n, xx + h, opts).value;
  const Wide d1 = (above - below) / (2 * h);
  const Wide d2 = (above - 2 * at + below) / (h * h);

  const Wide shifted = n + Wide(0.5);
  Wide rhs = 0;
  if (!detail::is_nonpositive_integer(shifted)) {
    const SignedLog<Wide> lg = signed_log_gamma(shifted);
    rhs = 4 * std::pow(xx / 2, n + 1) / boost::math::constants::root_pi<Wide>() /
          (Wide(lg.sign) * std::exp(lg.log_abs));
  }
  const Wide residual = xx * xx * d2 + xx * d1 + (xx * xx - n * n) * at - rhs;
  return static_cast<Real>(std::abs(residual));
}

}  // namespace kstruve
