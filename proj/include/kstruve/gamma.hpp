#pragma once

// Real gamma, log-gamma and k-gamma.
//
// Gamma(x) and ln Gamma(x) are delegated to Boost.Math; this header owns the
// pole and overflow policy (explicit errors instead of infinities) and the
// k-gamma reduction Gamma_k(z) = k^(z/k - 1) Gamma(z/k).

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "errors.hpp"
#include "evaluation.hpp"
#include "quadrature.hpp"

namespace kstruve {

namespace detail {

template <class Real>
[[noreturn]] void throw_pole(const char* fn, Real x) {
  std::ostringstream msg;
  msg << fn << ": pole at non-positive integer " << static_cast<double>(x);
  throw PoleError(msg.str());
}

template <class Real>
[[nodiscard]] Real exp_or_overflow(Real log_value, const char* fn) {
  if (log_value > std::log(std::numeric_limits<Real>::max()))
    throw OverflowError(std::string(fn) + ": result exceeds the representable range");
  return std::exp(log_value);
}

}  // namespace detail

/// ln |Gamma(x)| together with the sign of Gamma(x).
template <class Real = double>
struct SignedLog {
  Real log_abs{};
  int sign = 1;
};

/// ln Gamma(x) for x > 0.
template <class Real>
[[nodiscard]] Real log_gamma(Real x) {
  if (!(x > 0) || !std::isfinite(x)) throw DomainError("log_gamma: argument must be positive and finite");
  return boost::math::lgamma(x);
}

/// ln |Gamma(x)| and sign for any real x that is not a pole.
template <class Real>
[[nodiscard]] SignedLog<Real> signed_log_gamma(Real x) {
  if (!std::isfinite(x)) throw DomainError("signed_log_gamma: argument must be finite");
  if (detail::is_nonpositive_integer(x)) detail::throw_pole("signed_log_gamma", x);
  int sign = 1;
  const Real value = boost::math::lgamma(x, &sign);
  return {value, sign};
}

/// Gamma(x). Negative non-integer arguments use reflection (inside Boost).
template <class Real>
[[nodiscard]] Real gamma(Real x) {
  if (!std::isfinite(x)) throw DomainError("gamma: argument must be finite");
  if (detail::is_nonpositive_integer(x)) detail::throw_pole("gamma", x);
  const SignedLog<Real> lg = signed_log_gamma(x);
  if (lg.log_abs > std::log(std::numeric_limits<Real>::max()))
    throw OverflowError("gamma: result exceeds the representable range");
  // The direct evaluation is a few ulp; exp(lgamma) loses ~|lgamma| ulp.
  try {
    return boost::math::tgamma(x);
  } catch (const std::overflow_error&) {
    throw OverflowError("gamma: result exceeds the representable range");
  }
}

/// ln |Gamma_k(z)| and sign, via Gamma_k(z) = k^(z/k - 1) Gamma(z/k).
template <class Real>
[[nodiscard]] SignedLog<Real> signed_log_k_gamma(Real z, Real k) {
  if (!(k > 0) || !std::isfinite(k)) throw DomainError("k_gamma: k must be positive and finite");
  const Real w = z / k;
  if (detail::is_nonpositive_integer(w)) detail::throw_pole("k_gamma", w);
  SignedLog<Real> lg = signed_log_gamma(w);
  lg.log_abs += (w - 1) * std::log(k);
  return lg;
}

/// Gamma_k(z) = k^(z/k - 1) Gamma(z/k).
template <class Real>
[[nodiscard]] Real k_gamma(Real z, Real k) {
  if (!(k > 0) || !std::isfinite(k)) throw DomainError("k_gamma: k must be positive and finite");
  const Real w = z / k;
  if (detail::is_nonpositive_integer(w)) detail::throw_pole("k_gamma", w);
  const SignedLog<Real> lg = signed_log_k_gamma(z, k);
  const Real log_max = std::log(std::numeric_limits<Real>::max());
  if (lg.log_abs > log_max) throw OverflowError("k_gamma: result exceeds the representable range");
  if (w < Real(170) && std::abs((w - 1) * std::log(k)) < log_max / 2)
    return std::pow(k, w - 1) * gamma(w);
  return Real(lg.sign) * std::exp(lg.log_abs);
}

/// Gamma_k(z) from its defining integral, int_0^inf t^(z-1) exp(-t^k / k) dt,
/// mapped onto (0, 1) by t = s / (1 - s). Test oracle only.
inline double k_gamma_integral_oracle(double z, double k, double tol) {
  if (!(z > 0) || !(k > 0)) throw DomainError("k_gamma_integral_oracle: z and k must be positive");
  const auto integrand = [z, k](double s, double sc) {
    const double t = s / sc;
    const double log_f = (z - 1) * std::log(t) - std::pow(t, k) / k - 2 * std::log(sc);
    return log_f < -745.0 ? 0.0 : std::exp(log_f);
  };
  QuadratureOptions opts;
  opts.tolerance = tol;
  opts.method = QuadratureMethod::tanh_sinh;
  return integrate(integrand, opts).value;
}

}  // namespace kstruve
