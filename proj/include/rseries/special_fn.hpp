#pragma once

// Classical special functions that the binomial-series closed forms reduce to.
// All routines are pure binary64 and throw the types in errors.hpp on bad input.

namespace rseries {

namespace constants {
inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double catalan = 0.91596559417721901505460351493238411;
inline constexpr double ln2 = 0.69314718055994530941723212145817657;
}  // namespace constants

/// Euler's constant from the limit  H_n - log n, with the Euler-Maclaurin
/// correction applied at n = 1000. Agrees with constants::euler_gamma to
/// the last bit; kept so the frozen constant is reproducible.
double euler_gamma_from_limit();

/// Gamma function. Lanczos (g = 7, 9 terms) with reflection below 1/2.
/// Throws PoleError at non-positive integers and OverflowError above 171.6.
double gamma(double x);

/// log|Gamma(x)| for x > 0.
double log_gamma(double x);

/// Digamma psi(x): upward shift to x >= 10, then the asymptotic series
/// through 1/x^12. Reflection for negative arguments.
double digamma(double x);

/// Hurwitz zeta  sum_{j>=0} (q+j)^{-s}  for s > 1, q > 0.
double hurwitz_zeta(double s, double q);

/// Same, also returning the Euler-Maclaurin remainder estimate (first omitted term).
double hurwitz_zeta(double s, double q, double* abs_error);

/// Lerch transcendent  sum_{j>=0} beta^j (b+j)^{-s}  for |beta| < 1, b > 0.
double lerch_phi(double beta, double s, double b);

/// Odd-denominator alternating sum  1 - 3^{-r} + 5^{-r} - ...  (r >= 1).
/// S'_1 = pi/4, S'_2 = Catalan's constant, S'_3 = pi^3/32.
double s_prime(int r);

/// Gamma(p+b) Gamma(a+1) / Gamma(p+a+b+1), the Beta integral
/// int_0^1 x^{p+b-1} (1-x)^a dx. Its Taylor coefficients in p generate phi(a,b,n).
double beta_f(double p, double a, double b);

}  // namespace rseries
