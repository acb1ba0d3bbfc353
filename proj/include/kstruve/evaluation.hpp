#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>

namespace kstruve {

/// How a series tolerance is scaled when deciding to stop.
enum class ToleranceMode {
  mixed,     ///< tail <= tol * max(1, |partial|)
  relative,  ///< tail <= tol * |partial|
};

template <class Real = double>
struct SeriesOptions {
  Real tolerance = Real(1e-12);
  /// Defaults to the evaluator's own limit when unset.
  std::optional<std::size_t> max_terms{};
  ToleranceMode mode = ToleranceMode::mixed;
};

/// A truncated series value. `error_bound` covers the neglected tail plus
/// an estimate of the floating-point rounding accumulated in the partial sum.
template <class Real = double>
struct EvaluationResult {
  Real value{};
  Real error_bound{};
  std::size_t terms_used = 0;
};

namespace detail {

/// Neumaier compensated summation.
template <class Real>
class CompensatedSum {
 public:
  void add(Real x) noexcept {
    const Real t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  [[nodiscard]] Real value() const noexcept { return sum_ + comp_; }

 private:
  Real sum_{};
  Real comp_{};
};

template <class Real>
[[nodiscard]] Real stopping_target(const SeriesOptions<Real>& opts, Real partial) noexcept {
  const Real scale = opts.mode == ToleranceMode::mixed ? std::max(Real(1), std::abs(partial))
                                                       : std::abs(partial);
  return opts.tolerance * scale;
}

template <class Real>
[[nodiscard]] bool is_nonpositive_integer(Real x) noexcept {
  return x <= 0 && x == std::nearbyint(x);
}

}  // namespace detail
}  // namespace kstruve
