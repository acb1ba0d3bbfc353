#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <kstruve/lavoie_trottier.hpp>
#include <kstruve/quadrature.hpp>

#include "golden_values.hpp"

namespace kstruve {
namespace {

struct Case {
  std::string name;
  std::function<double(double, double)> f;
  double exact;
  bool smooth;
};

// Integrands with closed-form antiderivatives on (0, 1).
std::vector<Case> battery() {
  return {
      {"one", [](double, double) { return 1.0; }, 1.0, true},
      {"cubic", [](double x, double) { return x * x * x - 2 * x; }, -0.75, true},
      {"lavoie_1_1", [](double x, double xc) { return xc * (1 - x / 3); }, 4.0 / 9.0, true},
      {"exp", [](double x, double) { return std::exp(x); }, std::numbers::e - 1, true},
      {"cos", [](double x, double) { return std::cos(x); }, std::sin(1.0), true},
      {"arctan", [](double x, double) { return 1 / (1 + x * x); }, std::numbers::pi / 4, true},
      {"log1p", [](double x, double) { return 1 / (1 + x); }, std::numbers::ln2, true},
      {"inv_sqrt", [](double x, double) { return 1 / std::sqrt(x); }, 2.0, false},
      {"inv_sqrt_right", [](double, double xc) { return 1 / std::sqrt(xc); }, 2.0, false},
      {"log", [](double x, double) { return std::log(x); }, -1.0, false},
  };
}

TEST(Integrate, Examples) {
  EXPECT_NEAR(integrate([](double) { return 1.0; }, 1e-12, QuadratureMethod::adaptive_gk).value, 1.0, 1e-12);
  EXPECT_NEAR(integrate([](double) { return 1.0; }, 1e-12, QuadratureMethod::tanh_sinh).value, 1.0, 1e-12);
  EXPECT_NEAR(integrate([](double x) { return 1 / std::sqrt(x); }, 1e-10, QuadratureMethod::tanh_sinh).value,
              2.0, 2e-10);
  EXPECT_NEAR(integrate([](double x) { return (1 - x) * (1 - x / 3); }, 1e-12, QuadratureMethod::adaptive_gk).value,
              4.0 / 9.0, 1e-12);
}

TEST(Integrate, ErrorEstimateIsReliable) {
  for (const auto& c : battery())
    for (auto method : {QuadratureMethod::tanh_sinh, QuadratureMethod::adaptive_gk}) {
      if (!c.smooth && method == QuadratureMethod::adaptive_gk) continue;
      const auto r = integrate(c.f, 1e-10, method);
      EXPECT_TRUE(r.converged);
      EXPECT_GE(r.error_estimate, 0.0);
      EXPECT_LE(std::abs(r.value - c.exact), 3 * r.error_estimate)
          << c.name << " method " << static_cast<int>(method) << " value " << r.value;
    }
}

TEST(Integrate, MethodsAgreeOnSmoothIntegrands) {
  for (const auto& c : battery()) {
    if (!c.smooth) continue;
    const double gk = integrate(c.f, 1e-12, QuadratureMethod::adaptive_gk).value;
    const double ts = integrate(c.f, 1e-12, QuadratureMethod::tanh_sinh).value;
    EXPECT_NEAR(gk, ts, 1e-9) << c.name;
  }
}

TEST(Integrate, ConvergedImpliesEstimateWithinTolerance) {
  for (const auto& c : battery()) {
    const auto r = integrate(c.f, 1e-9, QuadratureMethod::tanh_sinh);
    EXPECT_LE(r.error_estimate, 1e-9 * std::abs(r.value)) << c.name;
    EXPECT_GT(r.evaluations, 0u);
  }
}

TEST(Integrate, NeverSamplesEndpoints) {
  for (auto method : {QuadratureMethod::tanh_sinh, QuadratureMethod::adaptive_gk}) {
    double lo = 1, hi = 0;
    const auto f = [&](double x) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
      return std::pow(x, -0.75);
    };
    QuadratureOptions opts;
    opts.method = method;
    opts.on_failure = OnFailure::report;
    (void)integrate(f, opts);
    EXPECT_GT(lo, 0.0);
    EXPECT_LT(hi, 1.0);
  }
}

TEST(Integrate, ComplementArgumentIsExact) {
  const auto f = [](double x, double xc) {
    EXPECT_GT(xc, 0.0);
    EXPECT_NEAR(x + xc, 1.0, 1e-15);
    return std::pow(xc, -0.9);
  };
  EXPECT_NEAR(integrate(f, 1e-10, QuadratureMethod::tanh_sinh).value, 10.0, 1e-8);
}

TEST(Integrate, NonFiniteSampleRaises) {
  const auto f = [](double x) { return x > 0.5 ? std::nan("") : 1.0; };
  EXPECT_THROW((void)integrate(f, 1e-10, QuadratureMethod::tanh_sinh), NonFiniteSampleError);
  EXPECT_THROW((void)integrate(f, 1e-10, QuadratureMethod::adaptive_gk), NonFiniteSampleError);
  try {
    (void)integrate([](double x) { return 1 / (x - 0.5) / 0.0; }, 1e-10, QuadratureMethod::adaptive_gk);
    FAIL() << "expected NonFiniteSampleError";
  } catch (const NonFiniteSampleError& e) {
    EXPECT_GT(e.abscissa(), 0.0);
    EXPECT_LT(e.abscissa(), 1.0);
  }
}

TEST(Integrate, NonConvergenceIsReported) {
  const auto wild = [](double x) { return std::sin(1 / x) / x; };
  QuadratureOptions opts;
  opts.tolerance = 1e-14;
  opts.max_level = 4;
  opts.max_subdivisions = 20;
  for (auto method : {QuadratureMethod::tanh_sinh, QuadratureMethod::adaptive_gk}) {
    opts.method = method;
    opts.on_failure = OnFailure::throw_error;
    EXPECT_THROW((void)integrate(wild, opts), ConvergenceError);
    opts.on_failure = OnFailure::report;
    const auto r = integrate(wild, opts);
    EXPECT_FALSE(r.converged);
    EXPECT_TRUE(std::isfinite(r.value));
  }
}

TEST(Integrate, RejectsNonPositiveTolerance) {
  EXPECT_THROW((void)integrate([](double) { return 1.0; }, 0.0, QuadratureMethod::tanh_sinh), DomainError);
}

TEST(SelectMethod, SingularEndpointsUseTanhSinh) {
  EXPECT_EQ(select_method(-0.5, 1.0), QuadratureMethod::tanh_sinh);
  EXPECT_EQ(select_method(1.0, 0.5), QuadratureMethod::tanh_sinh);
  EXPECT_EQ(select_method(1.0, 2.0), QuadratureMethod::adaptive_gk);
}

TEST(LavoieTrottier, RhsExamples) {
  EXPECT_NEAR(lavoie_trottier_rhs(1, 1), 4.0 / 9.0, 1e-15);
  EXPECT_NEAR(lavoie_trottier_rhs(2, 1), 8.0 / 81.0, 1e-15);
  EXPECT_NEAR(lavoie_trottier_rhs(0.5, 0.5), 2 * std::numbers::pi / 3, 1e-14);
  EXPECT_THROW((void)lavoie_trottier_rhs(0, 1), DomainError);
  EXPECT_THROW((void)lavoie_trottier_rhs(1, -1), DomainError);
}

TEST(LavoieTrottier, CheckExamples) {
  const auto one = lavoie_trottier_check(1, 1, 1e-10);
  EXPECT_EQ(one.verdict, Verdict::confirmed);
  EXPECT_LE(one.rel_dev_corrected, 1e-10);
  const auto r = lavoie_trottier_check(0.75, 1.25, 1e-10);
  EXPECT_EQ(r.verdict, Verdict::confirmed);
  EXPECT_NEAR(r.lhs_value, golden::kLavoie075_125, 1e-10 * golden::kLavoie075_125);
  EXPECT_EQ(lavoie_trottier_check(0.5, 0.5, 1e-10).verdict, Verdict::confirmed);
}

TEST(LavoieTrottier, IdentityOnGrid) {
  for (double a : {0.6, 1.0, 1.5, 2.0, 3.25})
    for (double b : {0.6, 1.0, 1.5, 2.0, 3.25}) {
      const auto r = lavoie_trottier_check(a, b, 1e-10);
      EXPECT_LE(r.rel_dev_corrected, 1e-10) << a << ' ' << b;
      EXPECT_EQ(r.verdict, Verdict::confirmed);
    }
}

TEST(LavoieTrottier, WrongRhsIsRefuted) {
  // A deliberately wrong closed form must not pass the same decision rule.
  const auto lhs = lavoie_trottier_lhs(1.5, 2.0, 1e-10);
  const double wrong = lavoie_trottier_rhs(1.5, 2.0) * (1 + 1e-4);
  EXPECT_GT(relative_deviation(lhs.value, wrong), 1e-6);
}

}  // namespace
}  // namespace kstruve
