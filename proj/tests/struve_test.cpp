#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <kstruve/struve.hpp>

#include "golden_values.hpp"

namespace kstruve {
namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(KStruve, Examples) {
  EXPECT_EQ(k_struve(StruveParams<double>{1, 1, 1}, 0.0, 1e-12).value, 0.0);
  EXPECT_LE(rel(struve_h(0.0, 1.0, 1e-14).value, golden::kStruveH0At1), 1e-14);
  EXPECT_LE(rel(struve_h(0.0, 2.0, 1e-14).value, golden::kStruveH0At2), 1e-14);
  EXPECT_LE(rel(struve_h(1.0, 2.0, 1e-14).value, golden::kStruveH1At2), 1e-14);
  EXPECT_LE(rel(struve_l(0.0, 1.0, 1e-14).value, golden::kStruveL0At1), 1e-14);
  EXPECT_LE(rel(k_struve(StruveParams<double>{1, 4, 4}, 2.0, 1e-14).value, golden::kKStruveNu1C4K4At2), 1e-13);
}

TEST(KStruve, ModifiedDominatesOrdinary) {
  EXPECT_GT(struve_l(0.0, 1.0, 1e-12).value, struve_h(0.0, 1.0, 1e-12).value);
}

TEST(KStruve, ModifiedMatchesDirectInstantiation) {
  double expected = 0;
  for (int r = 0; r < 30; ++r) expected += std::pow(0.5, 2 * r + 1) / std::pow(std::tgamma(r + 1.5), 2);
  EXPECT_LE(rel(struve_l(0.0, 1.0, 1e-15).value, expected), 1e-14);
}

TEST(KStruve, ReductionsAreBitIdentical) {
  for (double nu : {0.0, 0.5, 1.0, 2.5})
    for (double x : {0.1, 1.0, 5.0}) {
      EXPECT_EQ(k_struve(StruveParams<double>{nu, 1, 1}, x, 1e-12).value, struve_h(nu, x, 1e-12).value);
      EXPECT_EQ(k_struve(StruveParams<double>{nu, -1, 1}, x, 1e-12).value, struve_l(nu, x, 1e-12).value);
    }
}

TEST(KStruve, ScalingIdentity) {
  for (double k : {0.5, 2.0, 4.0})
    for (double c : {0.5, 1.0, 3.0})
      for (double order : {0.5, 1.5})
        for (double x : {0.5, 2.0}) {
          const double nu = order * k;
          const double lhs = k_struve(StruveParams<double>{nu, c, k}, x, 1e-15).value;
          const double scale = std::pow(k, -(order + 0.5)) * std::pow(c / k, -(order + 1) / 2);
          const double rhs = scale * struve_h(order, x * std::sqrt(c / k), 1e-15).value;
          EXPECT_LE(rel(lhs, rhs), 1e-10) << k << ' ' << c << ' ' << order << ' ' << x;
        }
}

TEST(KStruve, OdeResidual) {
  for (double nu : {0.0, 1.0})
    for (double x : {0.5, 1.0, 2.0, 4.0})
      EXPECT_LE(struve_ode_residual(nu, x, 1e-4, 1e-12), 1e-6) << nu << ' ' << x;
}

TEST(KStruve, OdeResidualPreconditions) {
  EXPECT_THROW((void)struve_ode_residual(0.0, 1e-4, 1e-4, 1e-12), DomainError);
  EXPECT_THROW((void)struve_ode_residual(-2.0, 1.0, 1e-4, 1e-12), DomainError);
  EXPECT_THROW((void)struve_ode_residual(0.0, 1.0, 0.0, 1e-12), DomainError);
}

TEST(KStruve, DomainErrors) {
  EXPECT_THROW((void)k_struve(StruveParams<double>{1, 1, 0}, 1.0, 1e-12), DomainError);
  EXPECT_THROW((void)k_struve(StruveParams<double>{-2, 1, 1}, 1.0, 1e-12), DomainError);
  EXPECT_THROW((void)k_struve(StruveParams<double>{0.5, 1, 1}, -1.0, 1e-12), DomainError);
  EXPECT_THROW((void)k_struve(StruveParams<double>{1, 1, 1}, 1.0, 0.0), DomainError);
  EXPECT_THROW((void)k_struve(StruveParams<double>{1, 1, 1}, std::nan(""), 1e-12), DomainError);
}

TEST(KStruve, NegativeArgumentWithIntegerExponent) {
  // nu/k + 1 = 1: odd in x.
  const double plus = struve_h(0.0, 1.5, 1e-14).value;
  EXPECT_DOUBLE_EQ(struve_h(0.0, -1.5, 1e-14).value, -plus);
  // nu/k + 1 = 2: even in x.
  const double even = struve_h(1.0, 1.5, 1e-14).value;
  EXPECT_DOUBLE_EQ(struve_h(1.0, -1.5, 1e-14).value, even);
}

TEST(KStruve, ZeroArgumentAtExponentZero) {
  // nu = -k: the leading term is the constant 1 / [Gamma_k(k/2) Gamma(3/2)].
  const auto r = k_struve(StruveParams<double>{-1, 1, 1}, 0.0, 1e-12);
  EXPECT_LE(rel(r.value, 1.0 / (std::tgamma(0.5) * std::tgamma(1.5))), 1e-15);
  EXPECT_THROW((void)k_struve(StruveParams<double>{-1.2, 1, 1}, 0.0, 1e-12), DomainError);
}

TEST(KStruve, MaxTermsRaisesConvergenceError) {
  SeriesOptions<double> opts;
  opts.tolerance = 1e-12;
  opts.max_terms = 3;
  EXPECT_THROW((void)struve_h(0.0, 20.0, opts), ConvergenceError);
}

TEST(KStruve, ModifiedPartialSumsIncrease) {
  // All terms are positive, so a result using more terms is never smaller.
  std::size_t previous_terms = 0;
  double previous = 0;
  for (double tol = 1e-1; tol >= 1e-15; tol /= 10) {
    const auto r = struve_l(0.5, 3.0, tol);
    EXPECT_GE(r.terms_used, previous_terms);
    if (r.terms_used > previous_terms) {
      EXPECT_GT(r.value, previous);
    }
    previous_terms = r.terms_used;
    previous = r.value;
  }
}

TEST(KStruve, TermsUsedGrowWithTighterTolerance) {
  const auto loose = struve_h(0.0, 3.0, 1e-4);
  const auto tight = struve_h(0.0, 3.0, 1e-14);
  EXPECT_LT(loose.terms_used, tight.terms_used);
}

TEST(KStruve, ErrorBoundSoundness) {
  std::mt19937_64 rng(20261014);
  std::uniform_real_distribution<double> kd(0.25, 4.0), cd(-3.0, 3.0), od(-0.4, 3.0), xd(0.05, 8.0),
      td(-12.0, -4.0);
  for (int i = 0; i < 200; ++i) {
    const double k = kd(rng);
    const StruveParams<double> p{od(rng) * k, cd(rng), k};
    const double x = xd(rng), tol = std::pow(10.0, td(rng));
    const auto coarse = k_struve(p, x, tol);
    const auto fine = k_struve(p, x, tol / 100);
    EXPECT_LE(std::abs(coarse.value - fine.value), coarse.error_bound)
        << "nu=" << p.nu << " c=" << p.c << " k=" << k << " x=" << x << " tol=" << tol;
  }
}

TEST(KStruve, LongDoubleInstantiation) {
  const long double v = struve_h(0.0L, 1.0L, 1e-18L).value;
  EXPECT_LE(std::abs(static_cast<double>(v) - golden::kStruveH0At1), 1e-16);
}

}  // namespace
}  // namespace kstruve
