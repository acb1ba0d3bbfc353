#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <kstruve/gamma.hpp>

#include "golden_values.hpp"

namespace kstruve {
namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(LogGamma, Examples) {
  EXPECT_EQ(log_gamma(1.0), 0.0);
  EXPECT_EQ(log_gamma(2.0), 0.0);
  EXPECT_NEAR(log_gamma(0.5), std::log(std::sqrt(std::numbers::pi)), 1e-15);
}

TEST(LogGamma, MatchesReferenceAcrossRange) {
  for (std::size_t i = 0; i < std::size(golden::kLogGammaArgs); ++i)
    EXPECT_LE(rel(log_gamma(golden::kLogGammaArgs[i]), golden::kLogGammaValues[i]), 1e-14)
        << "x = " << golden::kLogGammaArgs[i];
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_THROW((void)log_gamma(0.0), DomainError);
  EXPECT_THROW((void)log_gamma(-2.5), DomainError);
}

TEST(Gamma, Examples) {
  EXPECT_DOUBLE_EQ(gamma(5.0), 24.0);
  EXPECT_LE(rel(gamma(0.5), 1.7724538509055160), 1e-15);
  EXPECT_LE(rel(gamma(-0.5), -3.5449077018110320), 1e-15);
}

TEST(Gamma, Factorials) {
  double factorial = 1;
  for (int n = 1; n <= 20; ++n) {
    EXPECT_LE(rel(gamma(double(n)), factorial), 1e-13) << n;
    factorial *= n;
  }
}

TEST(Gamma, Recurrence) {
  for (double x : {0.1, 0.5, 1.5, 10.5}) EXPECT_LE(rel(gamma(x + 1), x * gamma(x)), 1e-13) << x;
}

TEST(Gamma, ReflectionNegativeArguments) {
  for (double x : {-0.3, -1.5, -7.25, -20.5}) {
    const double reflected = std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1 - x));
    EXPECT_LE(rel(gamma(x), reflected), 1e-13) << x;
  }
}

TEST(Gamma, PolesAndOverflow) {
  EXPECT_THROW((void)gamma(0.0), PoleError);
  EXPECT_THROW((void)gamma(-3.0), PoleError);
  EXPECT_THROW((void)gamma(172.0), OverflowError);
  EXPECT_NO_THROW((void)gamma(170.5));
}

TEST(KGamma, Examples) {
  for (double k : {0.25, 1.0, 3.5}) EXPECT_NEAR(k_gamma(k, k), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(k_gamma(4.0, 2.0), 2.0);
  for (double z : {0.3, 2.5, 7.0}) EXPECT_EQ(k_gamma(z, 1.0), gamma(z));
}

TEST(KGamma, Recurrence) {
  for (double z : {0.3, 0.9, 1.7, 4.2})
    for (double k : {0.5, 1.0, 2.0, 3.5}) {
      const double next = k_gamma(z + k, k);
      EXPECT_LE(std::abs(next - z * k_gamma(z, k)) / std::abs(next), 1e-12) << z << ' ' << k;
    }
}

TEST(KGamma, MatchesDefiningIntegral) {
  for (double z : {0.5, 1.0, 2.5})
    for (double k : {0.5, 1.0, 2.0}) {
      const double expected = k_gamma(z, k);
      EXPECT_LE(std::abs(expected - k_gamma_integral_oracle(z, k, 1e-10)) / expected, 1e-8) << z << ' ' << k;
    }
}

TEST(KGamma, IntegralOracleExamples) {
  EXPECT_NEAR(k_gamma_integral_oracle(1, 1, 1e-10), 1.0, 1e-10);
  EXPECT_NEAR(k_gamma_integral_oracle(2, 2, 1e-10), 1.0, 1e-10);
  EXPECT_NEAR(k_gamma_integral_oracle(3, 1, 1e-10), 2.0, 2e-10);
}

TEST(KGamma, Errors) {
  EXPECT_THROW((void)k_gamma(-4.0, 2.0), PoleError);
  EXPECT_THROW((void)k_gamma(0.0, 0.5), PoleError);
  EXPECT_THROW((void)k_gamma(1.0, 0.0), DomainError);
  EXPECT_THROW((void)k_gamma(1.0, -1.0), DomainError);
  EXPECT_THROW((void)k_gamma_integral_oracle(-1.0, 1.0, 1e-10), DomainError);
  // Gamma(900) overflows even though the k-power would shrink it.
  EXPECT_THROW((void)k_gamma(900.0, 1.0), OverflowError);
}

TEST(KGamma, LargeArgumentsUseLogSpace) {
  // Gamma_k(z) with z/k = 200 would overflow Gamma alone but k^(z/k-1) brings it back.
  const double z = 200 * 0.01, k = 0.01;
  const double expected = std::exp(199 * std::log(0.01) + log_gamma(200.0));
  EXPECT_LE(rel(k_gamma(z, k), expected), 1e-12);
}

}  // namespace
}  // namespace kstruve
