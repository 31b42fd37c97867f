#include <gtest/gtest.h>

#include <cmath>

#include "rseries/errors.hpp"
#include "rseries/quadrature.hpp"
#include "rseries/special_fn.hpp"

using namespace rseries;
using constants::pi;

TEST(Unit, Examples) {
  EXPECT_NEAR(integrate_unit([](double, double) { return 1.0; }).value, 1.0, 1e-14);
  EXPECT_NEAR(integrate_unit([](double t, double) { return std::log(t); }).value, -1.0, 1e-12);
  const auto r = integrate_unit([](double t, double u) { return std::pow(t, -0.5) * std::pow(u, -0.75); });
  EXPECT_NEAR(r.value, beta_f(0.0, -0.5, 0.25), 1e-10);
  EXPECT_LE(r.abs_error_bound, 1e-10);
}

TEST(Decay, PolynomialTimesExponential) {
  for (int k = 0; k <= 6; ++k) {
    for (double b : {0.25, 1.0, 3.0}) {
      const double exact = std::tgamma(k + 1.0) / std::pow(b, k + 1);
      const auto r = integrate_decay([=](double x) { return std::pow(x, k) * std::exp(-b * x); });
      EXPECT_LE(std::fabs(r.value - exact), 1e-12 * exact) << k << " " << b;
    }
  }
}

TEST(Decay, Examples) {
  const double p0 = beta_f(0.0, -0.5, 0.25);
  EXPECT_NEAR(integrate_decay([](double x) { return x * std::exp(-x); }).value, 1.0, 1e-13);
  EXPECT_NEAR(oracle_value({IntegralForm::F1, -0.5, 0.25, 1.0}).value, pi * p0, 1e-9 * pi * p0);
  const double x2 = (pi * pi + 16.0 * constants::catalan) * p0;
  EXPECT_NEAR(oracle_value({IntegralForm::F1, -0.5, 0.25, 2.0}).value, x2, 1e-9 * x2);
  EXPECT_NEAR(x2, 128.61, 0.01);
}

TEST(Decay, SubstitutionConsistency) {
  // F1 with integer alpha = n equals (-1)^n times F2
  for (double a : {-0.5, 0.0, 1.5}) {
    for (double b : {0.25, 1.0}) {
      for (int n : {0, 1, 2, 3}) {
        const double f1 = oracle_value({IntegralForm::F1, a, b, static_cast<double>(n)}).value;
        const double f2 = oracle_value({IntegralForm::F2, a, b, static_cast<double>(n)}).value;
        EXPECT_LE(std::fabs(f1 - ((n % 2 == 0) ? f2 : -f2)), 1e-9 * std::fabs(f1)) << a << " " << b << " " << n;
      }
    }
  }
}

TEST(TwoSided, Examples) {
  auto sech = [](double x) { return 1.0 / std::cosh(x); };
  EXPECT_NEAR(integrate_two_sided([&](double x) { return x * x * sech(0.5 * x) / 2.0; }).value, pi * pi * pi, 1e-9);
  EXPECT_NEAR(integrate_two_sided([&](double x) { return x * sech(0.5 * x); }).value, 0.0, 1e-12);
  IntegralSpec s{IntegralForm::F12, 0.0, 0.5};
  EXPECT_NEAR(oracle_value(s).value, pi * pi * pi, 1e-9);
}

namespace {

double abel(const LineIntegrand& f, double power) { return abel_oscillatory(f, Envelope{1.0, power}).value; }

}  // namespace

TEST(Abel, ElementaryProducts) {
  using std::cos;
  using std::sin;
  EXPECT_NEAR(abel([](double x) { return sin(x); }, 0), 1.0, 1e-6);
  EXPECT_NEAR(abel([](double x) { return cos(x) * cos(2 * x); }, 0), 0.0, 1e-6);
  EXPECT_NEAR(abel([](double x) { return sin(x) * cos(2 * x); }, 0), -1.0 / 3.0, 1e-6);
  EXPECT_NEAR(abel([](double x) { return sin(x) * sin(2 * x) * sin(3 * x); }, 0), 7.0 / 48.0, 1e-6);
  EXPECT_NEAR(abel([](double x) { return x * cos(x); }, 1), -1.0, 1e-6);
  EXPECT_NEAR(abel([](double x) { return x * sin(x) * sin(2 * x); }, 1), -4.0 / 9.0, 1e-6);
  EXPECT_NEAR(abel([](double x) { return x * cos(x) * cos(2 * x); }, 1), -5.0 / 9.0, 1e-6);
}

TEST(Abel, TrigForms) {
  EXPECT_NEAR(oracle_value({IntegralForm::F7, 1.0, 1.0, 0.0, 0.0, 2.0}).value, -1.0 / 3.0, 1e-6);
  EXPECT_NEAR(oracle_value({IntegralForm::F8, 1.0, 1.0, 1.0, 0.0, 2.0}).value, -4.0 / 9.0, 1e-6);
  EXPECT_NEAR(oracle_value({IntegralForm::F10, 1.0, 1.0, 0.0, 0.0, 2.0}).value, 2.0 / 3.0, 1e-6);
  EXPECT_NEAR(oracle_value({IntegralForm::F10, 2.0, 1.0, 0.0, 0.0, 3.0}).value, 7.0 / 15.0, 1e-6);
}

TEST(Oracle, LogForms) {
  // int_0^1 log t (1-t)^{b-1} t^a dt = B(a+1,b) (psi(a+1) - psi(a+b+1))
  for (double a : {-0.5, 0.5}) {
    for (double b : {0.25, 1.0}) {
      const double exact = beta_f(0.0, a, b) * (digamma(a + 1.0) - digamma(a + b + 1.0));
      EXPECT_NEAR(oracle_value({IntegralForm::F4, a, b, 0.0}).value, exact, 1e-9) << a << " " << b;
    }
  }
  const double v = oracle_value({IntegralForm::F4, -0.5, 0.25, 1.0}).value;
  EXPECT_GT(v, 0.0);
  // F3 is F4 under t = 1 - e^{-x}
  EXPECT_NEAR(oracle_value({IntegralForm::F3, -0.5, 0.25, 1.0}).value, -v, 1e-9);
}

TEST(Oracle, PlusForms) {
  EXPECT_NEAR(oracle_value({IntegralForm::F5, 3.0, 1.0, 0.0}).value, 3.75, 1e-12);
  // beta = 1 in F6 is F5
  EXPECT_NEAR(oracle_value({IntegralForm::F6, 0.5, 1.5, 1.0, 1.0}).value,
              oracle_value({IntegralForm::F5, 0.5, 1.5, 1.0}).value, 1e-12);
}

TEST(Oracle, Domain) {
  EXPECT_THROW(oracle_value({IntegralForm::F1, -0.5, 0.0, 1.0}), DomainError);
  EXPECT_THROW(oracle_value({IntegralForm::F7, 1.5, 1.0, 0.0, 0.0, 2.0}), DomainError);
}
