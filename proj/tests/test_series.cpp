#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rseries/compensated_sum.hpp"
#include "rseries/errors.hpp"
#include "rseries/series.hpp"
#include "rseries/special_fn.hpp"

using namespace rseries;
using constants::pi;

namespace {

double binom(double a, int i) {
  double c = 1.0;
  for (int j = 0; j < i; ++j) c *= (a - j) / (j + 1);
  return c;
}

// (-1)^n / n! times the n-th derivative in p of beta_f(p, a, b) at 0: central
// differences at h, h/2, h/4 with two Richardson steps. h shrinks with b since
// the nearest pole of Gamma(p+b) sits at p = -b; rounding limits how small it can go.
double beta_oracle(double a, double b, int n) {
  auto diff = [&](double h) {
    double acc = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double c = binom(n, j) * ((j % 2 == 0) ? 1.0 : -1.0);
      acc += c * beta_f((0.5 * n - j) * h, a, b);
    }
    return acc / std::pow(h, n);
  };
  const double h = 4e-2 * std::fmin(b, 1.0);
  const double d0 = diff(h);
  const double d1 = diff(0.5 * h);
  const double d2 = diff(0.25 * h);
  const double r1 = (4.0 * d1 - d0) / 3.0;
  const double r2 = (4.0 * d2 - d1) / 3.0;
  const double d = (16.0 * r2 - r1) / 15.0;
  return ((n % 2 == 0) ? 1.0 : -1.0) * d / std::tgamma(n + 1.0);
}

}  // namespace

TEST(Series, Examples) {
  EXPECT_NEAR(eval_psi_general({1.0, 0.5, -1.0, 0.0}).value, 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(eval_phi(-0.5, 0.25, 0.0).value, 5.2441151085842428, 1e-7);
  EXPECT_NEAR(eval_phi(0.0, 2.0, 1.0).value, 0.25, 1e-16);
  EXPECT_NEAR(eval_phi(-1.0, 2.0, 1.0).value, pi * pi / 6.0 - 1.0, 1e-10);
  EXPECT_NEAR(eval_phi(-1.5, 1.25, 1.0).value, 2.0 * (1.0 - pi / 4.0) * beta_f(0.0, -0.5, 0.25), 1e-8);
  EXPECT_NEAR(eval_phi_tilde(1.0, 0.5, 0.0).value, 8.0 / 3.0, 1e-15);
  EXPECT_NEAR(eval_phi_tilde(-1.0, 1.0, 1.0).value, pi * pi / 12.0, 1e-12);
  EXPECT_NEAR(eval_phi_tilde(0.0, 3.0, 2.0).value, 1.0 / 27.0, 1e-17);
}

TEST(Series, LerchCrossCheck) {
  // sum_i (-1)^i C(-1,i) beta^i / (b+i) = sum_i (-beta)^i ... with C(-1,i) = (-1)^i
  EXPECT_NEAR(eval_psi_general({-1.0, 1.0, -0.5, 0.0}).value, 2.0 * constants::ln2, 1e-12);
  EXPECT_NEAR(eval_psi_general({-1.0, 1.0, 0.5, 0.0}).value, 2.0 * std::log(1.5), 1e-12);
}

TEST(Series, ConvergenceReport) {
  auto r = convergence_report({3.0, 1.0, -1.0, 0.0});
  EXPECT_EQ(r.regime, Regime::finite);
  EXPECT_EQ(r.finite_terms, 4);
  r = convergence_report({-0.5, 0.25, -1.0, 0.0});
  EXPECT_EQ(r.regime, Regime::power_law);
  EXPECT_DOUBLE_EQ(r.decay_exponent, 1.5);
  EXPECT_FALSE(r.alternating);
  r = convergence_report({-0.5, 0.25, 1.0, 0.0});
  EXPECT_TRUE(r.alternating);
  EXPECT_EQ(convergence_report({-1.5, 1.0, -1.0, 0.25}).regime, Regime::divergent);
  EXPECT_EQ(convergence_report({-3.0, 1.0, 0.5, 0.0}).regime, Regime::geometric);
}

TEST(Series, DivergenceAndDomain) {
  EXPECT_THROW(eval_phi(-1.5, 1.0, 0.25), DivergenceError);
  EXPECT_THROW(eval_phi(-1.0, 1.0, 0.0), DivergenceError);
  EXPECT_THROW(eval_phi(0.5, -1.0, 0.0), DomainError);
  EXPECT_THROW(eval_psi_general({0.5, 1.0, 1.5, 0.0}), DomainError);
}

TEST(Series, FiniteSumsAreExact) {
  for (int a = 0; a <= 6; ++a) {
    for (double b : {0.5, 1.0, 2.75}) {
      for (double alpha : {0.0, 1.0, 2.5}) {
        long double ref = 0.0L;
        long double scale = 0.0L;
        for (int i = 0; i <= a; ++i) {
          const long double term = ((i % 2 == 0) ? 1.0L : -1.0L) * static_cast<long double>(binom(a, i)) *
                                   std::pow(static_cast<long double>(b) + i, -static_cast<long double>(alpha) - 1.0L);
          ref += term;
          scale += std::fabs(term);
        }
        const auto r = eval_phi(a, b, alpha);
        // relative to the size of the terms: the sum itself can cancel down to a few ulps of them
        EXPECT_LE(std::fabs(r.value - static_cast<double>(ref)), 1e-15 * static_cast<double>(scale))
            << a << " " << b << " " << alpha;
        EXPECT_EQ(r.terms_used, a + 1);
      }
    }
  }
}

TEST(Series, BetaOracleAgreement) {
  for (double a : {-0.5, -0.25, 0.5}) {
    for (double b : {0.25, 1.0, 2.5}) {
      for (int n = 0; n <= 3; ++n) {
        const double v = eval_phi(a, b, n).value;
        EXPECT_LE(std::fabs(v - beta_oracle(a, b, n)), 1e-6 * std::fabs(v)) << a << " " << b << " " << n;
      }
    }
  }
}

TEST(Series, BoundsAreTrue) {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> da(-0.95, 3.0);
  std::uniform_real_distribution<double> db(0.1, 3.0);
  std::uniform_real_distribution<double> dalpha(0.0, 2.0);
  std::uniform_real_distribution<double> dbeta(-0.99, 0.99);
  std::uniform_int_distribution<int> kind(0, 2);
  EvalOptions small;
  small.max_terms = 20000;
  EvalOptions big = small;
  big.max_terms = 4 * small.max_terms;
  int checked = 0;
  while (checked < 500) {
    const int k = kind(rng);
    SeriesParams sp{da(rng), db(rng), k == 0 ? -1.0 : k == 1 ? 1.0 : dbeta(rng), dalpha(rng)};
    if (convergence_report(sp).regime == Regime::divergent) continue;
    const auto v = eval_psi_general(sp, small);
    const auto ref = eval_psi_general(sp, big);
    EXPECT_LE(std::fabs(v.value - ref.value), v.abs_error_bound)
        << "a=" << sp.a << " b=" << sp.b << " beta=" << sp.beta << " alpha=" << sp.alpha;
    ++checked;
  }
}

TEST(Series, CappedReportsAchievedBound) {
  EvalOptions o;
  o.max_terms = 5000;
  const auto r = eval_phi(-0.5, 0.25, 0.0, o);
  EXPECT_FALSE(r.converged);
  EXPECT_GT(r.abs_error_bound, 1e-12);
  EXPECT_LE(std::fabs(r.value - beta_f(0.0, -0.5, 0.25)), r.abs_error_bound);
}

TEST(Series, AcceleratedValueInsideBound) {
  const auto r = eval_phi(-0.5, 0.25, 0.0);
  EXPECT_TRUE(r.accelerated);
  EXPECT_NEAR(r.value, beta_f(0.0, -0.5, 0.25), 1e-9);
  EXPECT_LE(std::fabs(r.value - beta_f(0.0, -0.5, 0.25)), r.abs_error_bound);
}

TEST(Derivative, Examples) {
  EXPECT_NEAR(eval_phi_da_direct(0.0, 1.0, 0).value, -1.0, 1e-9);
  EXPECT_NEAR(eval_phi_da_direct(0.0, 1.0, 1).value, pi * pi / 6.0 - 2.0, 1e-12);
  EXPECT_NEAR(eval_phi_da_direct(-0.5, 0.25, 0).value, (constants::ln2 - pi / 2.0) * beta_f(0.0, -0.5, 0.25), 1e-7);
}

TEST(Derivative, MatchesFiniteDifference) {
  constexpr double h = 1e-5;
  for (double a : {-0.5, 0.3, 1.0, 2.5}) {
    for (double b : {0.5, 1.0, 2.0}) {
      for (int n : {0, 1, 2}) {
        const double fd = (eval_phi(a + h, b, n).value - eval_phi(a - h, b, n).value) / (2.0 * h);
        EXPECT_NEAR(eval_phi_da_direct(a, b, n).value, fd, 1e-6) << a << " " << b << " " << n;
      }
    }
  }
}

TEST(Derivative, RealPowerMatchesInteger) {
  EXPECT_NEAR(eval_phi_da_series(0.5, 1.0, 1.0).value, eval_phi_da_direct(0.5, 1.0, 1).value, 1e-12);
}
