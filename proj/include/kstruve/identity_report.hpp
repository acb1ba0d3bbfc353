#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace kstruve {

/// Parameters shared by both integral theorems and their corollaries.
struct TheoremParams {
  double alpha = 0;
  double mu = 0;
  double nu = 0;
  double c = 1;
  double k = 1;
  double y = 0;
  friend bool operator==(const TheoremParams&, const TheoremParams&) = default;
};

struct LavoieParams {
  double alpha = 0;
  double beta = 0;
  friend bool operator==(const LavoieParams&, const LavoieParams&) = default;
};

enum class Verdict {
  confirmed_corrected,  ///< only the re-derived right-hand side matches
  confirmed_paper,      ///< only the printed right-hand side matches
  both_agree,
  neither,
  inconclusive,  ///< quadrature error too large to decide, or the point failed
  confirmed,     ///< single right-hand side identity holds
  refuted,       ///< single right-hand side identity fails
};

[[nodiscard]] constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::confirmed_corrected: return "CONFIRMED_CORRECTED";
    case Verdict::confirmed_paper: return "CONFIRMED_PAPER";
    case Verdict::both_agree: return "BOTH_AGREE";
    case Verdict::neither: return "NEITHER";
    case Verdict::inconclusive: return "INCONCLUSIVE";
    case Verdict::confirmed: return "CONFIRMED";
    case Verdict::refuted: return "REFUTED";
  }
  return "INCONCLUSIVE";
}

[[nodiscard]] inline std::optional<Verdict> parse_verdict(std::string_view s) noexcept {
  for (Verdict v : {Verdict::confirmed_corrected, Verdict::confirmed_paper, Verdict::both_agree,
                    Verdict::neither, Verdict::inconclusive, Verdict::confirmed, Verdict::refuted})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

/// True for verdicts that count as a successful verification run.
[[nodiscard]] constexpr bool is_success(Verdict v) noexcept {
  return v == Verdict::confirmed_corrected || v == Verdict::both_agree || v == Verdict::confirmed;
}

struct IdentityReport {
  std::string identity;
  std::variant<TheoremParams, LavoieParams> params;
  double lhs_value = 0;
  double lhs_error_estimate = 0;
  double rhs_paper = 0;
  double rhs_corrected = 0;
  double rel_dev_paper = 0;
  double rel_dev_corrected = 0;
  Verdict verdict = Verdict::inconclusive;
  bool strict_hypotheses = true;
  /// Non-empty when the point could not be evaluated.
  std::string error;
};

inline constexpr double kDeviationFloor = 1e-300;

[[nodiscard]] inline double relative_deviation(double lhs, double rhs) noexcept {
  return std::abs(lhs - rhs) / std::max(std::abs(lhs), kDeviationFloor);
}

/// Decide between the printed and re-derived right-hand sides.
[[nodiscard]] inline Verdict adjudicate(double lhs, double lhs_error, bool lhs_converged,
                                        double dev_paper, double dev_corrected, double threshold) noexcept {
  if (!lhs_converged || lhs_error > threshold * std::abs(lhs)) return Verdict::inconclusive;
  const bool paper_ok = dev_paper <= threshold;
  const bool corrected_ok = dev_corrected <= threshold;
  if (paper_ok && corrected_ok) return Verdict::both_agree;
  if (corrected_ok) return Verdict::confirmed_corrected;
  if (paper_ok) return Verdict::confirmed_paper;
  return Verdict::neither;
}

}  // namespace kstruve
