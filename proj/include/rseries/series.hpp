#pragma once

#include <cstdint>
#include <string_view>

// Direct, tail-bounded summation of the binomial-weighted series
//
//   Psi(a, b, beta, alpha) = sum_{i>=0} C(a,i) beta^i / (b+i)^{alpha+1}
//
// with phi = Psi(beta = -1) and phi-tilde = Psi(beta = +1), plus the
// term-wise a-derivative of phi. Every result carries an absolute error bound
// that is provable from the term recurrence (see convergence_report for the
// regime that supplies it).

namespace rseries {

struct SeriesParams {
  double a = 0.0;      // binomial exponent
  double b = 1.0;      // denominator shift, > 0
  double beta = -1.0;  // geometric weight in [-1, 1]
  double alpha = 0.0;  // power, >= 0
};

enum class Method { direct, closed_form, recursion, oracle };

std::string_view to_string(Method m);

struct EvalResult {
  double value = 0.0;
  double abs_error_bound = 0.0;
  std::int64_t terms_used = 1;
  Method method = Method::direct;
  // False when the iteration cap was hit before the bound met the target;
  // abs_error_bound then holds the bound actually achieved.
  bool converged = true;
  // True when value came from tail extrapolation; the bound still covers it.
  bool accelerated = false;
};

struct EvalOptions {
  std::int64_t max_terms = 10'000'000;
  double abs_target = 1e-12;
  double rel_target = 1e-13;
  bool accelerate = true;
};

enum class Regime { finite, geometric, power_law, divergent };

std::string_view to_string(Regime r);

struct ConvergenceReport {
  Regime regime = Regime::divergent;
  // Terms decay like i^{-exponent} in the power-law regime (a + alpha + 2);
  // for the other regimes this is 0.
  double decay_exponent = 0.0;
  // Number of nonzero terms in the finite regime.
  std::int64_t finite_terms = 0;
  // Power-law terms alternate in sign (beta = +1) rather than keep one sign (beta = -1).
  bool alternating = false;
};

ConvergenceReport convergence_report(const SeriesParams& params);

/// Psi(a, b, beta, alpha). Throws DivergenceError outside the convergence
/// region and NonConvergenceError if no rigorous bound exists at the cap.
EvalResult eval_psi_general(const SeriesParams& params, const EvalOptions& opts = {});

EvalResult eval_phi(double a, double b, double alpha, const EvalOptions& opts = {});

EvalResult eval_phi_tilde(double a, double b, double alpha, const EvalOptions& opts = {});

/// d/da phi(a, b, n) summed term by term:
///   sum_{i>=1} (-1)^i C(a,i) [sum_{j<i} 1/(a-j)] / (b+i)^{n+1}.
/// At non-negative integer a the vanishing factor of C(a,i) is differentiated
/// exactly, so a = 0 gives  -sum_{i>=1} 1/(i (b+i)^{n+1}).
EvalResult eval_phi_da_direct(double a, double b, int n, const EvalOptions& opts = {});

/// Same series with a real power alpha in place of the integer n.
EvalResult eval_phi_da_series(double a, double b, double alpha, const EvalOptions& opts = {});

}  // namespace rseries
