#pragma once

#include <utility>
#include <vector>

#include "rseries/series.hpp"
#include "rseries/verification.hpp"

// Closed-form and recursive routes to phi, phi-tilde and Psi: Ramanujan's
// recursion, the coefficient-triangle shift identity, derivative formulas in a,
// trigonometric integrals and the two-sided x^2 family.

namespace rseries {

struct SigmaSet {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> values;  // values[k-1] = sigma_k
};

/// sigma_k = sum_j [(b+j)^{-k} - (a+b+1+j)^{-k}] in closed form:
/// psi(a+b+1) - psi(b) for k = 1, zeta(k,b) - zeta(k,a+b+1) for k >= 2.
double sigma(double a, double b, int k);
SigmaSet sigma_set(double a, double b, int n);

/// phi(a,b,n) from  n phi_n = sum_k sigma_k phi_{n-k},  phi_0 = Gamma(a+1)Gamma(b)/Gamma(a+b+1).
EvalResult ramanujan_phi(double a, double b, int n);

/// Both sides of
///   sum_{k=1}^{m+1} A_k^{(m+1)}(p,b) (-beta)^{k-1} Psi(p-k+1, b+k-1, beta, mu+m) = Psi(p, b, beta, mu),
/// summed directly; relative residual.
VerificationRecord master_shift(double p, double b, double beta, double mu, int m, double tol = 1e-9);

/// phi-tilde(-1,b,alpha) against 2^{-alpha} zeta(alpha+1, b/2) - zeta(alpha+1, b); absolute residual.
VerificationRecord eta_reduction(double b, double alpha, double tol = 1e-11);

/// d/da phi(a,b,n) = (psi(a+1) - psi(a+b+1)) phi(a,b,n) + sum_{k=1}^n zeta(k+1,a+b+1) phi(a,b,n-k).
double phi_da_closed(double a, double b, int n);

/// The a = 0 case written out:  -(C + psi(b+1))/b^{n+1} + sum_{k=1}^n zeta(k+1,b+1)/b^{n+1-k}.
double phi_da_zero_expansion(double b, int n);

/// 1/b^n + sum_{i>=1} (-1)^i C(a,i) [sum_{j<i} 1/(a-j)] / (b+i)^n  =  1/b^n + phi_da(a,b,n-1).
double harmonic_weighted_sum(double a, double b, int n);

/// sum_{j>=1} 1/(j (b+j)^n) = -phi_da(0,b,n-1).
double inverse_factor_sum(double b, int n);

/// phi_a^{(m)}(a,b,0) against (-1)^m m! phi(b-1, a+1, m). m = 1 uses phi_da_closed,
/// larger m a central difference of it.
VerificationRecord interchange_check(double a, double b, int m, double tol = 1e-9);

struct TrigResult {
  double lambda_c = 0.0;
  double lambda_s = 0.0;
  double a = 0.0;
  double w = 0.0;
  double alpha = 0.0;
};

/// Abel values of int_0^inf x^alpha sin^a x {cos, sin}(wx) dx, with b = (w-a)/2:
///   lambda_c = -2^{-a-alpha-1} Gamma(alpha+1) phi(a,b,alpha) sin((a+alpha) pi/2),
///   lambda_s = +2^{-a-alpha-1} Gamma(alpha+1) phi(a,b,alpha) cos((a+alpha) pi/2).
TrigResult trig_lambda(int a, double w, double alpha);

/// The same pair as printed with the (a-alpha) phase and b = (w+a)/2. Only used to document the discrepancy.
TrigResult trig_lambda_printed(int a, double w, double alpha);

/// Abel values of int_0^inf x^alpha cos^a x {cos, sin}(vx) dx via phi-tilde(a, (v-a)/2, alpha).
TrigResult trig_cos(int a, double v, double alpha);

/// a-derivatives of trig_lambda at fixed w: the log(sin x)-weighted integrals,
/// with log sin x continued along x as log|sin x| + i pi floor(x/pi).
std::pair<double, double> log_sin_integral(int a, double w, double alpha);

enum class TwoSidedReading { printed, corrected };

/// Closed form for
///   m = 0:  int_R x^2 e^{-bx} / ((1+e^{-x})(1+beta e^{-x})) dx,
///   m = 1:  b I_1 - beta I_2,  I_k = int_R x^2 e^{-(b+k-1)x} / ((1+e^{-x})(1+beta e^{-x})^k) dx.
double two_sided_closed(double b, double beta, int m, TwoSidedReading reading);

/// Quadrature of the same left-hand side.
EvalResult two_sided_oracle(double b, double beta, int m);

/// Closed form against quadrature, relative residual.
VerificationRecord two_sided_family(double b, double beta, int m,
                                    TwoSidedReading reading = TwoSidedReading::printed, double tol = 1e-6);

}  // namespace rseries
