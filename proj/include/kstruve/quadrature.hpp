#pragma once

// Quadrature over the open interval (0, 1).
//
// Integrands may be called either as f(x) or as f(x, xc) where xc = 1 - x is
// supplied directly by the rule. The two-argument form keeps full relative
// precision near x = 1, which matters for weights like (1 - x)^(-1/2).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace kstruve {

enum class QuadratureMethod { adaptive_gk, tanh_sinh };

enum class OnFailure {
  throw_error,  ///< raise ConvergenceError when the tolerance is not met
  report,       ///< return the best estimate with converged = false
};

struct QuadratureOptions {
  /// Relative tolerance: convergence requires error_estimate <= tol * |value|.
  double tolerance = 1e-10;
  QuadratureMethod method = QuadratureMethod::tanh_sinh;
  OnFailure on_failure = OnFailure::throw_error;
  std::size_t max_subdivisions = 2000;  // adaptive_gk
  int max_level = 12;                   // tanh_sinh
};

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// tanh-sinh for weights with an integrable singularity (exponent < 1) at
/// either end, Gauss-Kronrod otherwise.
[[nodiscard]] inline QuadratureMethod select_method(double left_exponent,
                                                    double right_exponent) noexcept {
  return std::min(left_exponent, right_exponent) < 1.0 ? QuadratureMethod::tanh_sinh
                                                       : QuadratureMethod::adaptive_gk;
}

namespace detail {

template <class F>
class SampledIntegrand {
 public:
  explicit SampledIntegrand(F& f) : f_(f) {}

  double operator()(double x, double xc) {
    double v;
    if constexpr (std::is_invocable_r_v<double, F&, double, double>) {
      v = f_(x, xc);
    } else {
      // x has rounded onto an endpoint; the node's contribution counts as zero.
      if (x <= 0.0 || x >= 1.0) return 0.0;
      v = f_(x);
    }
    ++evaluations_;
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrand returned a non-finite value at x = " << x;
      throw NonFiniteSampleError(msg.str(), x);
    }
    return v;
  }

  [[nodiscard]] std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  F& f_;
  std::size_t evaluations_ = 0;
};

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd Kronrod nodes 1, 3, 5, 7.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi;           // bounds in x
  double lo_c, hi_c;       // 1 - lo, 1 - hi
  double value, error;
  bool operator<(const Segment& other) const noexcept { return error < other.error; }
};

template <class F>
Segment gauss_kronrod_15(SampledIntegrand<F>& f, double lo, double hi, double lo_c, double hi_c) {
  const double half = 0.5 * (hi - lo);
  const double center = lo + half;
  const double center_c = lo_c - half;
  const double mid_value = f(center, center_c);
  double kronrod = kKronrodWeights[7] * mid_value;
  double gauss = kGaussWeights[3] * mid_value;
  double abs_sum = kKronrodWeights[7] * std::abs(mid_value);
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double left = f(center - dx, center_c + dx);
    const double right = f(center + dx, center_c - dx);
    const double pair = left + right;
    kronrod += kKronrodWeights[i] * pair;
    abs_sum += kKronrodWeights[i] * (std::abs(left) + std::abs(right));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  const double rounding = 50 * std::numeric_limits<double>::epsilon() * std::abs(half) * abs_sum;
  return {lo, hi, lo_c, hi_c, kronrod, std::max(std::abs(kronrod - gauss), rounding)};
}

template <class F>
QuadratureResult adaptive_gauss_kronrod(SampledIntegrand<F>& f, const QuadratureOptions& opts) {
  std::priority_queue<Segment> queue;
  Segment whole = gauss_kronrod_15(f, 0.0, 1.0, 1.0, 0.0);
  double total = whole.value;
  double error = whole.error;
  queue.push(whole);
  std::size_t segments = 1;
  while (error > opts.tolerance * std::abs(total) && segments < opts.max_subdivisions) {
    const Segment worst = queue.top();
    queue.pop();
    const double mid = worst.lo + 0.5 * (worst.hi - worst.lo);
    const double mid_c = worst.lo_c - 0.5 * (worst.hi - worst.lo);
    if (!(mid > worst.lo && mid < worst.hi)) {
      // Segment cannot be split further in double precision.
      queue.push(worst);
      break;
    }
    const Segment left = gauss_kronrod_15(f, worst.lo, mid, worst.lo_c, mid_c);
    const Segment right = gauss_kronrod_15(f, mid, worst.hi, mid_c, worst.hi_c);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++segments;
  }
  // Recompute from the segments to shed the drift of the running updates.
  double value = 0, err = 0;
  while (!queue.empty()) {
    value += queue.top().value;
    err += queue.top().error;
    queue.pop();
  }
  return {value, err, f.evaluations(), err <= opts.tolerance * std::abs(value)};
}

// Abscissa cutoff: the distance to the nearer endpoint, exp(-2u) / (1 + exp(-2u)),
// stays a normal double for |u| <= 354.
inline const double kTanhSinhMaxT =
    std::asinh(2.0 / std::numbers::pi * 0.5 * -std::log(std::numeric_limits<double>::min()));

template <class F>
QuadratureResult tanh_sinh(SampledIntegrand<F>& f, const QuadratureOptions& opts) {
  // x(t) = 1 / (1 + exp(-2u)), u = (pi/2) sinh t, dx/dt = pi cosh t * E / (1 + E)^2.
  const auto node_sum = [&](double t) {
    const double u = 0.5 * std::numbers::pi * std::sinh(std::abs(t));
    const double e = std::exp(-2.0 * u);
    const double near = e / (1.0 + e);
    const double far = 1.0 / (1.0 + e);
    if (near < std::numeric_limits<double>::min() || far == 0.0) return 0.0;
    const double weight = std::numbers::pi * std::cosh(t) * e / ((1.0 + e) * (1.0 + e));
    return t < 0 ? weight * f(near, far) : weight * f(far, near);
  };

  double sum = 0, abs_sum = 0;
  const auto accumulate = [&](double t) {
    const double v = node_sum(t);
    sum += v;
    abs_sum += std::abs(v);
  };

  const double t_max = kTanhSinhMaxT;
  double h = 1.0;
  accumulate(0.0);
  for (int j = 1; j * h <= t_max; ++j) {
    accumulate(j * h);
    accumulate(-j * h);
  }
  double estimate = h * sum;
  double error = std::abs(estimate);
  bool converged = false;

  for (int level = 1; level <= opts.max_level; ++level) {
    h *= 0.5;
    for (long j = 1; j * h <= t_max; j += 2) {
      accumulate(j * h);
      accumulate(-j * h);
    }
    const double next = h * sum;
    // Level difference, floored by the rounding noise of the weighted sum.
    error = std::max(std::abs(next - estimate), 16 * std::numeric_limits<double>::epsilon() * h * abs_sum);
    estimate = next;
    if (level >= 3 && error <= opts.tolerance * std::abs(estimate)) {
      converged = true;
      break;
    }
  }
  return {estimate, error, f.evaluations(), converged};
}

}  // namespace detail

/// Integrate f over (0, 1). Never samples the endpoints themselves.
template <class F>
QuadratureResult integrate(F&& f, const QuadratureOptions& opts = {}) {
  if (!(opts.tolerance > 0)) throw DomainError("quadrature tolerance must be positive");
  detail::SampledIntegrand<std::remove_reference_t<F>> sampled(f);
  QuadratureResult result = opts.method == QuadratureMethod::adaptive_gk
                                ? detail::adaptive_gauss_kronrod(sampled, opts)
                                : detail::tanh_sinh(sampled, opts);
  if (!result.converged && opts.on_failure == OnFailure::throw_error) {
    std::ostringstream msg;
    msg << "quadrature did not reach relative tolerance " << opts.tolerance
        << " (error estimate " << result.error_estimate << ")";
    throw ConvergenceError(msg.str());
  }
  return result;
}

template <class F>
QuadratureResult integrate(F&& f, double tolerance, QuadratureMethod method) {
  QuadratureOptions opts;
  opts.tolerance = tolerance;
  opts.method = method;
  return integrate(std::forward<F>(f), opts);
}

}  // namespace kstruve
