#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rseries/series.hpp"

// Numerical-integration oracles: tanh-sinh on (0,1), exponential maps for
// half-line and two-sided integrals, and Abel-regularized oscillatory integrals.

namespace rseries {

/// Integrand on (0,1) receiving both t and 1 - t, each to full relative precision.
using UnitIntegrand = std::function<double(double t, double one_minus_t)>;
using LineIntegrand = std::function<double(double x)>;

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-13;
  int max_level = 12;
};

/// tanh-sinh over (0,1). Endpoint algebraic/log singularities are fine.
/// converged = false when max_level is reached; abs_error_bound is then the last level difference.
EvalResult integrate_unit(const UnitIntegrand& f, const QuadOptions& opts = {});

/// int_0^inf f(x) dx for integrands decaying at least like e^{-bx}, via t = e^{-x}.
EvalResult integrate_decay(const LineIntegrand& f, const QuadOptions& opts = {});

/// int_{-inf}^{inf} f(x) dx, split at 0 with each half mapped as in integrate_decay.
EvalResult integrate_two_sided(const LineIntegrand& f, const QuadOptions& opts = {});

// |f(x)| <= scale * (1 + x)^power on x > 0; used to bound the cut-off tail.
struct Envelope {
  double scale = 1.0;
  double power = 0.0;
};

struct AbelOptions {
  double eps0 = 0.2;     // first damping rate
  int points = 7;        // eps_j = eps0 / 2^j, j < points
  double cutoff = 40.0;  // integrate F(eps) up to cutoff / eps
  double period = 3.14159265358979323846;  // panel width; singular points of f should sit on panel edges
};

/// lim_{eps -> 0+} int_0^inf f(x) e^{-eps x} dx by Richardson extrapolation in eps.
/// Throws ExtrapolationError when the last two extrapolants do not settle.
EvalResult abel_oscillatory(const LineIntegrand& f, const Envelope& env, const AbelOptions& opts = {});

enum class IntegralForm {
  F1,   // int_0^inf x^alpha e^{-bx} (1-e^{-x})^a dx
  F2,   // int_0^1 log^n(1-t) (1-t)^{b-1} t^a dt
  F3,   // int_0^inf x^n e^{-bx} (1-e^{-x})^a log(1-e^{-x}) dx
  F4,   // int_0^1 log^n(1-t) log t (1-t)^{b-1} t^a dt
  F5,   // int_0^inf x^alpha e^{-bx} (1+e^{-x})^a dx
  F6,   // int_0^inf x^alpha e^{-bx} (1+beta e^{-x})^a dx
  F7,   // int_0^inf x^alpha sin^a x cos wx dx  (Abel)
  F8,   // int_0^inf x^alpha sin^a x sin wx dx  (Abel)
  F9,   // int_0^inf x^alpha cos^a x cos wx dx  (Abel)
  F10,  // int_0^inf x^alpha cos^a x sin wx dx  (Abel)
  F11,  // int_0^inf x^alpha log(sin x) sin^a x e^{iwx} dx, cos or sin part (Abel)
  F12,  // int_R x^2 e^{-bx} / ((1+e^{-x})(1+beta e^{-x})^k) dx
};

std::string to_string(IntegralForm f);

struct IntegralSpec {
  IntegralForm form = IntegralForm::F1;
  double a = 0.0;
  double b = 1.0;
  double alpha = 0.0;  // also n for F2-F4 (integer valued)
  double beta = 0.0;
  double w = 0.0;      // frequency for F7-F11
  int k = 1;           // power of (1+beta e^{-x}) for F12
  bool sine_part = false;  // F11: sin(wx) instead of cos(wx)
};

/// Oracle evaluation of the integral described by spec.
EvalResult oracle_value(const IntegralSpec& spec);

}  // namespace rseries
