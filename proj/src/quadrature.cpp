#include "rseries/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "rseries/compensated_sum.hpp"
#include "rseries/errors.hpp"
#include "rseries/special_fn.hpp"

namespace rseries {

std::string to_string(IntegralForm f) {
  static constexpr std::array<const char*, 12> names = {"F1", "F2", "F3", "F4",  "F5",  "F6",
                                                        "F7", "F8", "F9", "F10", "F11", "F12"};
  return names[static_cast<std::size_t>(f)];
}

namespace {

using constants::pi;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// exp(-2|v|) stays a normal number up to |v| = 350.
constexpr double kSMax = 6.1;

struct Node {
  double t;
  double tc;
  double weight;  // dt/ds
};

Node node_at(double s) {
  const double v = 0.5 * pi * std::sinh(s);
  const double e = std::exp(-2.0 * std::fabs(v));
  const double big = 1.0 / (1.0 + e);
  const double small = e / (1.0 + e);
  const double weight = pi * std::cosh(s) * e / ((1.0 + e) * (1.0 + e));
  return s >= 0.0 ? Node{big, small, weight} : Node{small, big, weight};
}

// Sum of w f over nodes s = j h for j with the given stride/offset, also returning sum |w f|.
void level_sum(const UnitIntegrand& f, double h, int first, int stride, double s_max, CompensatedSum& acc,
               double& abs_acc) {
  for (int j = first;; j += stride) {
    const double s = j * h;
    if (s > s_max) break;
    for (int sign : {1, -1}) {
      if (j == 0 && sign < 0) continue;
      const Node n = node_at(sign * s);
      if (n.t == 0.0 || n.tc == 0.0 || n.weight == 0.0) continue;
      const double v = n.weight * f(n.t, n.tc);
      acc += v;
      abs_acc += std::fabs(v);
    }
  }
}

// Precomputed fixed-level rule on (0,1) for the oscillatory panels.
struct FixedRule {
  std::vector<Node> nodes;
};

const FixedRule& panel_rule() {
  static const FixedRule rule = [] {
    FixedRule r;
    constexpr double h = 1.0 / 16.0;
    constexpr double s_max = 3.5;
    for (int j = -static_cast<int>(s_max / h); j <= static_cast<int>(s_max / h); ++j) {
      Node n = node_at(j * h);
      n.weight *= h;
      r.nodes.push_back(n);
    }
    return r;
  }();
  return rule;
}

// int_X^inf scale (1+x)^power e^{-eps x} dx, with power rounded up to an integer.
double envelope_tail(const Envelope& env, double eps, double x) {
  const int k = static_cast<int>(std::ceil(std::fmax(env.power, 0.0)));
  const double y = 1.0 + x;
  double sum = 0.0;
  double falling = 1.0;  // k!/(k-i)!
  for (int i = 0; i <= k; ++i) {
    sum += falling * std::pow(y, k - i) / std::pow(eps, i + 1);
    falling *= static_cast<double>(k - i);
  }
  return env.scale * std::exp(eps - eps * y) * sum;
}

}  // namespace

EvalResult integrate_unit(const UnitIntegrand& f, const QuadOptions& opts) {
  double h = 1.0;
  CompensatedSum acc;
  double abs_acc = 0.0;
  level_sum(f, h, 0, 1, kSMax, acc, abs_acc);
  double estimate = h * acc.value();
  std::int64_t evaluations = 2 * static_cast<std::int64_t>(kSMax) + 1;

  EvalResult r;
  r.method = Method::oracle;
  for (int level = 1; level <= opts.max_level; ++level) {
    h *= 0.5;
    level_sum(f, h, 1, 2, kSMax, acc, abs_acc);
    evaluations += 2 * static_cast<std::int64_t>(kSMax / h);
    const double next = h * acc.value();
    const double diff = std::fabs(next - estimate);
    estimate = next;
    const double noise = 64.0 * kEps * h * abs_acc;
    r.value = estimate;
    r.abs_error_bound = std::fmax(diff, noise);
    r.terms_used = evaluations;
    if (!std::isfinite(estimate)) {
      throw DomainError("integrate_unit: integrand produced a non-finite value");
    }
    if (level >= 3 && (diff <= std::fmax(opts.abs_tol, opts.rel_tol * std::fabs(estimate)) || diff <= noise)) {
      return r;
    }
  }
  r.converged = false;
  return r;
}

EvalResult integrate_decay(const LineIntegrand& f, const QuadOptions& opts) {
  return integrate_unit(
      [&f](double t, double tc) {
        const double x = t < 0.5 ? -std::log(t) : -std::log1p(-tc);
        return f(x) / t;
      },
      opts);
}

EvalResult integrate_two_sided(const LineIntegrand& f, const QuadOptions& opts) {
  const EvalResult right = integrate_decay(f, opts);
  const EvalResult left = integrate_decay([&f](double x) { return f(-x); }, opts);
  EvalResult r;
  r.method = Method::oracle;
  r.value = right.value + left.value;
  r.abs_error_bound = right.abs_error_bound + left.abs_error_bound;
  r.terms_used = right.terms_used + left.terms_used;
  r.converged = right.converged && left.converged;
  return r;
}

EvalResult abel_oscillatory(const LineIntegrand& f, const Envelope& env, const AbelOptions& opts) {
  const int points = opts.points;
  if (points < 2 || points > 30) throw DomainError("abel_oscillatory: points must be in [2, 30]");
  std::vector<double> eps(points);
  std::vector<std::int64_t> panels(points);
  for (int j = 0; j < points; ++j) {
    eps[j] = opts.eps0 / std::ldexp(1.0, j);
    panels[j] = static_cast<std::int64_t>(std::ceil(opts.cutoff / eps[j] / opts.period));
  }

  // One pass over the panels of the smallest eps; damping factors for the
  // larger rates are squares of the smallest one.
  const FixedRule& rule = panel_rule();
  std::vector<CompensatedSum> sums(points);
  std::vector<double> damp(points);
  const double width = opts.period;
  const std::int64_t total_panels = panels.back();
  std::int64_t evaluations = 0;
  for (std::int64_t k = 0; k < total_panels; ++k) {
    const double left = static_cast<double>(k) * width;
    const double right = static_cast<double>(k + 1) * width;
    int active = 0;
    while (active < points && panels[active] <= k) ++active;
    std::vector<double> panel(points, 0.0);
    for (const Node& n : rule.nodes) {
      if (n.t == 0.0 || n.tc == 0.0) continue;
      const double x = n.t < 0.5 ? left + n.t * width : right - n.tc * width;
      const double fx = f(x);
      ++evaluations;
      if (fx == 0.0) continue;
      double d = std::exp(-eps[points - 1] * x);
      for (int j = points - 1; j >= active; --j) {
        damp[j] = d;
        d *= d;
      }
      const double wf = n.weight * width * fx;
      for (int j = active; j < points; ++j) panel[j] += wf * damp[j];
    }
    for (int j = active; j < points; ++j) sums[j] += panel[j];
  }

  double tail = 0.0;
  std::vector<std::vector<double>> table(points, std::vector<double>(points, 0.0));
  for (int j = 0; j < points; ++j) {
    table[j][0] = sums[j].value();
    if (!std::isfinite(table[j][0])) throw ExtrapolationError("abel_oscillatory: non-finite damped integral");
    tail = std::fmax(tail, envelope_tail(env, eps[j], static_cast<double>(panels[j]) * width));
  }
  for (int j = 1; j < points; ++j) {
    for (int k = 1; k <= j; ++k) {
      const double scale = std::ldexp(1.0, k) - 1.0;
      table[j][k] = table[j][k - 1] + (table[j][k - 1] - table[j - 1][k - 1]) / scale;
    }
  }
  const double value = table[points - 1][points - 1];
  const double error = std::fabs(value - table[points - 1][points - 2]) + tail;
  if (!std::isfinite(value) || !std::isfinite(error) || error > 0.1 * (1.0 + std::fabs(value))) {
    throw ExtrapolationError("abel_oscillatory: extrapolants do not settle (difference " + std::to_string(error) +
                             ")");
  }
  EvalResult r;
  r.value = value;
  r.abs_error_bound = error;
  r.terms_used = evaluations;
  r.method = Method::oracle;
  return r;
}

namespace {

double int_power(double x, double n) { return std::pow(x, static_cast<int>(std::lround(n))); }

// x^alpha e^{-bx} base^a assembled in log space; the factors alone can overflow near x = 0.
double damped_power(double x, double alpha, double b, double base, double a) {
  const double lx = alpha == 0.0 ? 0.0 : alpha * std::log(x);
  const double lb = a == 0.0 ? 0.0 : a * std::log(base);
  return std::exp(lx - b * x + lb);
}

void require_integer(double v, const char* what) {
  if (!(v >= 0.0 && v == std::floor(v))) throw DomainError(std::string(what) + " must be a non-negative integer");
}

// sin^a x log(sin x) e^{iwx} on the continuous branch log|sin x| + i pi floor(x/pi).
double log_sin_part(double x, double a, double w, bool sine_part) {
  const double s = std::sin(x);
  const double base = int_power(s, a);
  const double lg = std::log(std::fabs(s));
  const double branch = pi * std::floor(x / pi);
  const double c = std::cos(w * x);
  const double sn = std::sin(w * x);
  return sine_part ? base * (lg * sn - branch * c) : base * (lg * c + branch * sn);
}

}  // namespace

EvalResult oracle_value(const IntegralSpec& s) {
  const double a = s.a;
  const double b = s.b;
  const double alpha = s.alpha;
  if (s.form <= IntegralForm::F6 && !(b > 0.0)) throw DomainError("oracle_value: requires b > 0");
  if (s.form == IntegralForm::F6 && !(std::fabs(s.beta) <= 1.0)) throw DomainError("F6: requires |beta| <= 1");
  switch (s.form) {
    case IntegralForm::F1:
      return integrate_decay([=](double x) { return damped_power(x, alpha, b, -std::expm1(-x), a); });
    case IntegralForm::F2:
      require_integer(alpha, "F2: n");
      return integrate_unit(
          [=](double t, double tc) { return int_power(std::log(tc), alpha) * std::pow(tc, b - 1.0) * std::pow(t, a); });
    case IntegralForm::F3:
      require_integer(alpha, "F3: n");
      return integrate_decay([=](double x) {
        const double one_minus = -std::expm1(-x);
        return damped_power(x, alpha, b, one_minus, a) * std::log(one_minus);
      });
    case IntegralForm::F4:
      require_integer(alpha, "F4: n");
      return integrate_unit([=](double t, double tc) {
        return int_power(std::log(tc), alpha) * std::log(t) * std::pow(tc, b - 1.0) * std::pow(t, a);
      });
    case IntegralForm::F5:
      return integrate_decay([=](double x) { return damped_power(x, alpha, b, 1.0 + std::exp(-x), a); });
    case IntegralForm::F6: {
      const double beta = s.beta;
      return integrate_decay([=](double x) { return damped_power(x, alpha, b, 1.0 + beta * std::exp(-x), a); });
    }
    case IntegralForm::F7:
    case IntegralForm::F8:
    case IntegralForm::F9:
    case IntegralForm::F10: {
      require_integer(a, "trig exponent a");
      const bool sin_power = s.form == IntegralForm::F7 || s.form == IntegralForm::F8;
      const bool sin_outer = s.form == IntegralForm::F8 || s.form == IntegralForm::F10;
      const double w = s.w;
      return abel_oscillatory(
          [=](double x) {
            const double base = int_power(sin_power ? std::sin(x) : std::cos(x), a);
            const double outer = sin_outer ? std::sin(w * x) : std::cos(w * x);
            return std::pow(x, alpha) * base * outer;
          },
          Envelope{1.0, alpha});
    }
    case IntegralForm::F11: {
      require_integer(a, "log-sin exponent a");
      if (a < 1.0) throw DomainError("F11: requires a >= 1");
      const double w = s.w;
      const bool sine_part = s.sine_part;
      return abel_oscillatory([=](double x) { return std::pow(x, alpha) * log_sin_part(x, a, w, sine_part); },
                              Envelope{2.0, alpha + 1.0});
    }
    case IntegralForm::F12: {
      if (s.k < 1) throw DomainError("F12: requires k >= 1");
      const double beta = s.beta;
      const int k = s.k;
      return integrate_two_sided([=](double x) {
        if (x >= 0.0) {
          const double e = std::exp(-x);
          return x * x * std::exp(-b * x) / ((1.0 + e) * std::pow(1.0 + beta * e, k));
        }
        const double y = -x;
        const double e = std::exp(-y);
        // e^{by} / ((1+e^y)(1+beta e^y)^k) with the growing exponentials divided out
        if (beta == 0.0) return y * y * std::exp((b - 1.0) * y) / (1.0 + e);
        return y * y * std::exp((b - 1.0 - k) * y) / ((1.0 + e) * std::pow(e + beta, k));
      });
    }
  }
  throw DomainError("oracle_value: unsupported integral form");
}

}  // namespace rseries
