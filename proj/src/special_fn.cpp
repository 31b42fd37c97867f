#include "rseries/special_fn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "rseries/compensated_sum.hpp"
#include "rseries/errors.hpp"

namespace rseries {

namespace {

using constants::pi;

constexpr double kGammaOverflowArg = 171.6;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2k} / (2k)!, k = 1..9. The last entry only feeds the remainder estimate.
constexpr std::array<double, 9> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": non-finite argument");
  }
}

// sin(pi x) with exact argument reduction.
double sinpi(double x) {
  double r = std::fmod(x, 2.0);  // exact
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r > 0.5) return std::sin(pi * (1.0 - r));
  if (r < -0.5) return -std::sin(pi * (1.0 + r));
  return std::sin(pi * r);
}

double cospi(double x) { return sinpi(x + 0.5); }

double lanczos_sum(double xm1) {
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (xm1 + static_cast<double>(i));
  }
  return acc;
}

// Gamma for x >= 1/2.
double gamma_right(double x) {
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  const double half_power = std::pow(t, 0.5 * (xm1 + 0.5));
  return std::sqrt(2.0 * pi) * half_power * (half_power * std::exp(-t)) * lanczos_sum(xm1);
}

}  // namespace

double euler_gamma_from_limit() {
  constexpr int n = 1000;
  CompensatedSum harmonic;
  for (int k = n; k >= 1; --k) harmonic += 1.0 / k;
  const double inv = 1.0 / n;
  const double inv2 = inv * inv;
  // H_n - log n = C + 1/(2n) - 1/(12n^2) + 1/(120n^4) - 1/(252n^6) + ...
  harmonic += -std::log(static_cast<double>(n));
  harmonic += -0.5 * inv;
  harmonic += inv2 / 12.0;
  harmonic += -inv2 * inv2 / 120.0;
  harmonic += inv2 * inv2 * inv2 / 252.0;
  return harmonic.value();
}

double gamma(double x) {
  require_finite(x, "gamma");
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma: pole at non-positive integer " + std::to_string(x));
  }
  if (x > kGammaOverflowArg) {
    throw OverflowError("gamma: overflow for x > 171.6");
  }
  if (x < 0.5) {
    if (x < -170.5) {
      throw OverflowError("gamma: reflection overflows for x < -170.5");
    }
    return pi / (sinpi(x) * gamma_right(1.0 - x));
  }
  return gamma_right(x);
}

double log_gamma(double x) {
  require_finite(x, "log_gamma");
  if (x <= 0.0) {
    throw DomainError("log_gamma: requires x > 0");
  }
  if (x < 0.5) {
    return log_gamma(x + 1.0) - std::log(x);
  }
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (xm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(xm1));
}

double digamma(double x) {
  require_finite(x, "digamma");
  if (is_nonpositive_integer(x)) {
    throw PoleError("digamma: pole at non-positive integer " + std::to_string(x));
  }
  if (x < 0.0) {
    // psi(x) = psi(1-x) - pi cot(pi x)
    return digamma(1.0 - x) - pi * cospi(x) / sinpi(x);
  }
  CompensatedSum shift;
  double y = x;
  while (y < 10.0) {
    shift += -1.0 / y;
    y += 1.0;
  }
  const double inv2 = 1.0 / (y * y);
  // sum_{k=1}^{6} B_{2k} / (2k y^{2k}), Horner in 1/y^2
  const double series =
      inv2 * (1.0 / 12.0 +
              inv2 * (-1.0 / 120.0 +
                      inv2 * (1.0 / 252.0 +
                              inv2 * (-1.0 / 240.0 + inv2 * (1.0 / 132.0 + inv2 * (-691.0 / 32760.0))))));
  shift += std::log(y);
  shift += -0.5 / y;
  shift += -series;
  return shift.value();
}

double hurwitz_zeta(double s, double q, double* abs_error) {
  require_finite(s, "hurwitz_zeta");
  require_finite(q, "hurwitz_zeta");
  if (!(s > 1.0)) throw DomainError("hurwitz_zeta: requires s > 1");
  if (!(q > 0.0)) throw DomainError("hurwitz_zeta: requires q > 0");

  int shift = 12;
  for (;;) {
    CompensatedSum acc;
    for (int j = shift - 1; j >= 0; --j) {
      acc += std::pow(q + j, -s);
    }
    const double w = q + shift;
    const double w_s = std::pow(w, -s);
    acc += w * w_s / (s - 1.0);
    acc += 0.5 * w_s;

    // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * w^{-s-2k+1}
    double factor = s * w_s / w;
    const double inv_w2 = 1.0 / (w * w);
    double remainder = 0.0;
    for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
      const double term = kBernoulliOverFactorial[k] * factor;
      if (k + 1 == kBernoulliOverFactorial.size()) {
        remainder = std::fabs(term);
      } else {
        acc += term;
      }
      const double m = 2.0 * static_cast<double>(k + 1);
      factor *= (s + m - 1.0) * (s + m) * inv_w2;
    }
    const double value = acc.value();
    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(value);
    if (remainder <= 1e-15 * std::fabs(value) || shift >= 1 << 12) {
      if (abs_error != nullptr) *abs_error = remainder + rounding;
      return value;
    }
    shift *= 2;
  }
}

double hurwitz_zeta(double s, double q) { return hurwitz_zeta(s, q, nullptr); }

double lerch_phi(double beta, double s, double b) {
  require_finite(beta, "lerch_phi");
  require_finite(s, "lerch_phi");
  require_finite(b, "lerch_phi");
  if (!(std::fabs(beta) < 1.0)) throw DomainError("lerch_phi: requires |beta| < 1");
  if (!(b > 0.0)) throw DomainError("lerch_phi: requires b > 0");
  if (beta == 0.0) return std::pow(b, -s);

  const double abs_beta = std::fabs(beta);
  CompensatedSum acc;
  double beta_pow = 1.0;
  constexpr long kCap = 100'000'000;
  for (long j = 0; j < kCap; ++j) {
    acc += beta_pow * std::pow(b + j, -s);
    beta_pow *= beta;
    // sup of |T_{i+1}/T_i| over i > j; the power factor is monotone in i.
    const double power_ratio = std::pow((b + j + 2.0) / (b + j + 1.0), -s);
    const double rho = abs_beta * std::fmax(1.0, power_ratio);
    if (rho < 1.0) {
      const double next = std::fabs(beta_pow) * std::pow(b + j + 1.0, -s);
      const double tail = next / (1.0 - rho);
      if (tail <= 1e-16 * std::fabs(acc.value()) || tail < 1e-300) {
        return acc.value();
      }
    }
  }
  throw NonConvergenceError("lerch_phi: iteration cap reached", std::fabs(beta_pow));
}

double s_prime(int r) {
  if (r < 1) throw DomainError("s_prime: requires r >= 1");
  if (r == 1) return 0.25 * (digamma(0.75) - digamma(0.25));
  if (r < 64) {
    const double scale = std::pow(4.0, -r);
    return scale * (hurwitz_zeta(r, 0.25) - hurwitz_zeta(r, 0.75));
  }
  // 3^{-64} is already below the binary64 resolution of 1.
  return 1.0 - std::pow(3.0, -r);
}

double beta_f(double p, double a, double b) {
  require_finite(p, "beta_f");
  require_finite(a, "beta_f");
  require_finite(b, "beta_f");
  if (!(p + b > 0.0) || !(a > -1.0) || !(p + a + b + 1.0 > 0.0)) {
    throw DomainError("beta_f: requires p+b > 0, a > -1, p+a+b+1 > 0");
  }
  const double top = p + a + b + 1.0;
  if (top < 170.0) {
    return gamma(p + b) * gamma(a + 1.0) / gamma(top);
  }
  return std::exp(log_gamma(p + b) + log_gamma(a + 1.0) - log_gamma(top));
}

}  // namespace rseries
