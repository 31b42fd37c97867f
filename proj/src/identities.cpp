#include "rseries/identities.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "rseries/coeff_triangle.hpp"
#include "rseries/compensated_sum.hpp"
#include "rseries/errors.hpp"
#include "rseries/quadrature.hpp"
#include "rseries/special_fn.hpp"

namespace rseries {

namespace {

using constants::pi;

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

void require_recursion_domain(double a, double b, const char* fn) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError(std::string(fn) + ": non-finite argument");
  if (!(b > 0.0) || !(a > -1.0) || !(a + b + 1.0 > 0.0)) {
    throw DomainError(std::string(fn) + ": requires b > 0, a > -1, a + b + 1 > 0");
  }
}

// phi(a,b,0..n) by the recursion.
std::vector<double> ramanujan_table(double a, double b, int n) {
  require_recursion_domain(a, b, "ramanujan_phi");
  if (n < 0) throw DomainError("ramanujan_phi: requires n >= 0");
  const SigmaSet s = sigma_set(a, b, n);
  std::vector<double> phi(n + 1);
  phi[0] = beta_f(0.0, a, b);
  for (int j = 1; j <= n; ++j) {
    CompensatedSum acc;
    for (int k = 1; k <= j; ++k) acc += s.values[k - 1] * phi[j - k];
    phi[j] = acc.value() / j;
  }
  return phi;
}

double gamma_alpha(double alpha) { return gamma(alpha + 1.0); }

void require_trig(int a, double w, double alpha, const char* fn) {
  if (a < 1) throw DomainError(std::string(fn) + ": requires integer a >= 1");
  if (!(w > a)) throw DomainError(std::string(fn) + ": requires frequency > a");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError(std::string(fn) + ": requires alpha >= 0");
}

bool small_integer(double x) { return x >= 0.0 && x == std::floor(x) && x <= 64.0; }

}  // namespace

double sigma(double a, double b, int k) {
  if (k < 1) throw DomainError("sigma: requires k >= 1");
  if (!(b > 0.0) || !(a + b + 1.0 > 0.0)) throw DomainError("sigma: requires b > 0 and a + b + 1 > 0");
  if (k == 1) return digamma(a + b + 1.0) - digamma(b);
  return hurwitz_zeta(k, b) - hurwitz_zeta(k, a + b + 1.0);
}

SigmaSet sigma_set(double a, double b, int n) {
  SigmaSet s{a, b, {}};
  s.values.reserve(n);
  for (int k = 1; k <= n; ++k) s.values.push_back(sigma(a, b, k));
  return s;
}

EvalResult ramanujan_phi(double a, double b, int n) {
  const std::vector<double> phi = ramanujan_table(a, b, n);
  EvalResult r;
  r.value = phi[n];
  r.abs_error_bound = 64.0 * kEps * (n + 1) * std::fabs(phi[n]) + 1e-14 * std::fabs(phi[n]);
  r.terms_used = n + 1;
  r.method = Method::recursion;
  return r;
}

VerificationRecord master_shift(double p, double b, double beta, double mu, int m, double tol) {
  if (m < 0 || m + 1 > CoeffTriangle::kMaxDepth) throw DomainError("master_shift: m out of range");
  if (!(b > 0.0)) throw DomainError("master_shift: requires b > 0");
  const CoeffTriangle tri = CoeffTriangle::build(p, b, m + 1);

  std::int64_t terms = 0;
  auto instance = [&](double a, double bb, double alpha, const std::string& label) {
    try {
      const EvalResult r = eval_psi_general(SeriesParams{a, bb, beta, alpha});
      terms += r.terms_used;
      return r.value;
    } catch (const DivergenceError& e) {
      throw DivergenceError("master_shift: instance " + label + " diverges: " + e.what());
    }
  };

  CompensatedSum lhs;
  double weight = 1.0;  // (-beta)^{k-1}
  for (int k = 1; k <= m + 1; ++k) {
    const double coeff = tri.at(m + 1, k) * weight;
    weight *= -beta;
    if (coeff == 0.0) continue;
    lhs += coeff * instance(p - k + 1, b + k - 1, mu + m, "k=" + std::to_string(k));
  }
  const double rhs = instance(p, b, mu, "rhs");
  const std::string id = "shift[p=" + fmt(p) + ",b=" + fmt(b) + ",beta=" + fmt(beta) + ",mu=" + fmt(mu) +
                         ",m=" + std::to_string(m) + "]";
  return make_record(id, lhs.value(), rhs, tol, true, "direct/direct", terms);
}

VerificationRecord eta_reduction(double b, double alpha, double tol) {
  if (!(b > 0.0)) throw DomainError("eta_reduction: requires b > 0");
  if (!(alpha > 0.0)) throw DomainError("eta_reduction: requires alpha > 0");
  const EvalResult lhs = eval_phi_tilde(-1.0, b, alpha);
  const double rhs = std::pow(2.0, -alpha) * hurwitz_zeta(alpha + 1.0, 0.5 * b) - hurwitz_zeta(alpha + 1.0, b);
  return make_record("eta[b=" + fmt(b) + ",alpha=" + fmt(alpha) + "]", lhs.value, rhs, tol, false,
                     "direct/closed-form", lhs.terms_used);
}

double phi_da_closed(double a, double b, int n) {
  const std::vector<double> phi = ramanujan_table(a, b, n);
  const double top = a + b + 1.0;
  CompensatedSum acc;
  acc += (digamma(a + 1.0) - digamma(top)) * phi[n];
  for (int k = 1; k <= n; ++k) acc += hurwitz_zeta(k + 1.0, top) * phi[n - k];
  return acc.value();
}

double phi_da_zero_expansion(double b, int n) {
  if (!(b > 0.0)) throw DomainError("phi_da_zero_expansion: requires b > 0");
  if (n < 0) throw DomainError("phi_da_zero_expansion: requires n >= 0");
  CompensatedSum acc;
  acc += -(constants::euler_gamma + digamma(b + 1.0)) / std::pow(b, n + 1);
  for (int k = 1; k <= n; ++k) acc += hurwitz_zeta(k + 1.0, b + 1.0) / std::pow(b, n + 1 - k);
  return acc.value();
}

double harmonic_weighted_sum(double a, double b, int n) {
  if (n < 1) throw DomainError("harmonic_weighted_sum: requires n >= 1");
  return 1.0 / std::pow(b, n) + phi_da_closed(a, b, n - 1);
}

double inverse_factor_sum(double b, int n) {
  if (!(b > 0.0)) throw DomainError("inverse_factor_sum: requires b > 0");
  if (n < 1) throw DomainError("inverse_factor_sum: requires n >= 1");
  return -phi_da_closed(0.0, b, n - 1);
}

VerificationRecord interchange_check(double a, double b, int m, double tol) {
  if (m < 1) throw DomainError("interchange_check: requires m >= 1");
  require_recursion_domain(a, b, "interchange_check");
  double factorial = 1.0;
  for (int j = 2; j <= m; ++j) factorial *= j;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double rhs = sign * factorial * ramanujan_phi(b - 1.0, a + 1.0, m).value;

  double lhs = 0.0;
  std::string method = "closed-form/recursion";
  if (m == 1) {
    lhs = phi_da_closed(a, b, 0);
  } else {
    // (m-1)-th central difference of the first derivative, one Richardson step
    const int q = m - 1;
    auto diff = [&](double h) {
      CompensatedSum acc;
      double binom = 1.0;
      for (int j = 0; j <= q; ++j) {
        const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        acc += sgn * binom * phi_da_closed(a + (0.5 * q - j) * h, b, 0);
        binom = binom * (q - j) / (j + 1);
      }
      return acc.value() / std::pow(h, q);
    };
    const double h = std::fmin(1e-2, 0.4 * (a + 1.0) / q);
    lhs = (4.0 * diff(0.5 * h) - diff(h)) / 3.0;
    method = "finite-difference/recursion";
  }
  return make_record("interchange[a=" + fmt(a) + ",b=" + fmt(b) + ",m=" + std::to_string(m) + "]", lhs, rhs, tol,
                     true, method, m + 1);
}

TrigResult trig_lambda(int a, double w, double alpha) {
  require_trig(a, w, alpha, "trig_lambda");
  const double b = 0.5 * (w - a);
  const double scale = std::pow(2.0, -a - alpha - 1.0) * gamma_alpha(alpha) * eval_phi(a, b, alpha).value;
  const double theta = 0.5 * (a + alpha) * pi;
  return TrigResult{-scale * std::sin(theta), scale * std::cos(theta), static_cast<double>(a), w, alpha};
}

TrigResult trig_lambda_printed(int a, double w, double alpha) {
  require_trig(a, w, alpha, "trig_lambda_printed");
  const double b = 0.5 * (w + a);
  const double scale = std::pow(2.0, -a - alpha - 1.0) * gamma_alpha(alpha) * eval_phi(a, b, alpha).value;
  const double theta = 0.5 * (a - alpha) * pi;
  return TrigResult{scale * std::sin(theta), scale * std::cos(theta), static_cast<double>(a), w, alpha};
}

TrigResult trig_cos(int a, double v, double alpha) {
  require_trig(a, v, alpha, "trig_cos");
  const double b = 0.5 * (v - a);
  const double scale = std::pow(2.0, -a - alpha - 1.0) * gamma_alpha(alpha) * eval_phi_tilde(a, b, alpha).value;
  const double theta = 0.5 * alpha * pi;
  return TrigResult{-scale * std::sin(theta), scale * std::cos(theta), static_cast<double>(a), v, alpha};
}

std::pair<double, double> log_sin_integral(int a, double w, double alpha) {
  require_trig(a, w, alpha, "log_sin_integral");
  const double b = 0.5 * (w - a);
  const double k = std::pow(2.0, -a - alpha - 1.0);
  const double g = gamma_alpha(alpha);
  const double phi = eval_phi(a, b, alpha).value;
  const double phi_a = small_integer(alpha) ? phi_da_closed(a, b, static_cast<int>(alpha))
                                            : eval_phi_da_series(a, b, alpha).value;
  // b = (w-a)/2 moves with a, and d phi/db = -(alpha+1) phi(a,b,alpha+1)
  const double dphi = phi_a + 0.5 * (alpha + 1.0) * eval_phi(a, b, alpha + 1.0).value;
  const double dk = -constants::ln2 * k;
  const double theta = 0.5 * (a + alpha) * pi;
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double d_lc = -g * (dk * phi * s + k * dphi * s + k * phi * 0.5 * pi * c);
  const double d_ls = g * (dk * phi * c + k * dphi * c - k * phi * 0.5 * pi * s);
  return {d_lc, d_ls};
}

double two_sided_closed(double b, double beta, int m, TwoSidedReading reading) {
  if (!(b > 0.0 && b < 1.0)) throw DomainError("two_sided: requires 0 < b < 1");
  if (!(beta >= 0.0 && beta < 1.0)) throw DomainError("two_sided: requires 0 <= beta < 1");
  if (m != 0 && m != 1) throw DomainError("two_sided: requires m in {0, 1}");
  const double s = std::sin(b * pi);
  const double c = std::cos(b * pi);
  const double one_minus = 1.0 - beta;
  if (reading == TwoSidedReading::printed) {
    const double base = pi * pi * pi / s * (2.0 - s * s);
    return m == 0 ? base / one_minus : base * (b / one_minus + beta / (one_minus * one_minus));
  }
  // moments of e^{-bx}/(1+e^{-x}) over the real line
  const double i0 = pi / s;
  const double i1 = pi * pi * c / (s * s);
  const double i2 = pi * pi * pi * (2.0 - s * s) / (s * s * s);
  double g = 0.0;        // beta^{1-b} (I2 + 2L I1 + L^2 I0), L = log beta
  double beta_dg = 0.0;  // beta dG/dbeta
  if (beta > 0.0) {
    const double l = std::log(beta);
    const double q = i2 + 2.0 * l * i1 + l * l * i0;
    const double pw = std::pow(beta, 1.0 - b);
    g = pw * q;
    beta_dg = pw * ((1.0 - b) * q + 2.0 * i1 + 2.0 * l * i0);
  }
  const double j0 = (i2 - g) / one_minus;
  if (m == 0) return j0;
  const double beta_dj0 = -beta_dg / one_minus + beta * (i2 - g) / (one_minus * one_minus);
  return b * j0 + beta_dj0;
}

EvalResult two_sided_oracle(double b, double beta, int m) {
  if (!(b > 0.0 && b < 1.0)) throw DomainError("two_sided: requires 0 < b < 1");
  if (!(beta >= 0.0 && beta < 1.0)) throw DomainError("two_sided: requires 0 <= beta < 1");
  if (m != 0 && m != 1) throw DomainError("two_sided: requires m in {0, 1}");
  IntegralSpec spec;
  spec.form = IntegralForm::F12;
  spec.b = b;
  spec.beta = beta;
  spec.k = 1;
  EvalResult first = oracle_value(spec);
  if (m == 0) return first;
  EvalResult r = first;
  r.value = b * first.value;
  r.abs_error_bound = b * first.abs_error_bound;
  if (beta > 0.0) {
    spec.b = b + 1.0;
    spec.k = 2;
    const EvalResult second = oracle_value(spec);
    r.value -= beta * second.value;
    r.abs_error_bound += beta * second.abs_error_bound;
    r.terms_used += second.terms_used;
    r.converged = r.converged && second.converged;
  }
  return r;
}

VerificationRecord two_sided_family(double b, double beta, int m, TwoSidedReading reading, double tol) {
  const double closed = two_sided_closed(b, beta, m, reading);
  const EvalResult oracle = two_sided_oracle(b, beta, m);
  const char* tag = reading == TwoSidedReading::printed ? "printed" : "corrected";
  return make_record("twosided[b=" + fmt(b) + ",beta=" + fmt(beta) + ",m=" + std::to_string(m) + "," + tag + "]",
                     closed, oracle.value, tol, true, "closed-form/oracle", oracle.terms_used);
}

}  // namespace rseries
