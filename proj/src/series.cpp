#include "rseries/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rseries/compensated_sum.hpp"
#include "rseries/errors.hpp"

namespace rseries {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::closed_form: return "closed-form";
    case Method::recursion: return "recursion";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::finite: return "finite";
    case Regime::geometric: return "geometric";
    case Regime::power_law: return "power-law";
    case Regime::divergent: return "divergent";
  }
  return "unknown";
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_nonneg_integer(double a) { return a >= 0.0 && a == std::floor(a) && a < 1e9; }

// x -> x^{-(alpha+1)}, by repeated squaring (and one sqrt) when the exponent
// is a small integer or half-integer.
class InversePower {
 public:
  explicit InversePower(double alpha) : exponent_(alpha + 1.0) {
    const double twice = 2.0 * exponent_;
    if (twice == std::floor(twice) && exponent_ <= 64.0) {
      int_exponent_ = static_cast<int>(exponent_);
      half_ = twice != 2.0 * int_exponent_;
    }
  }

  double operator()(double x) const {
    if (int_exponent_ < 0) return std::pow(x, -exponent_);
    double result = half_ ? std::sqrt(x) : 1.0;
    double base = x;
    for (int e = int_exponent_; e > 0; e >>= 1) {
      if (e & 1) result *= base;
      base *= base;
    }
    return 1.0 / result;
  }

 private:
  double exponent_;
  int int_exponent_ = -1;
  bool half_ = false;
};

double stop_target(const EvalOptions& o, double partial) {
  return std::fmax(o.abs_target, o.rel_target * std::fabs(partial));
}

void validate(const SeriesParams& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.beta) || !std::isfinite(p.alpha)) {
    throw DomainError("series: non-finite parameter");
  }
  if (!(p.b > 0.0)) throw DomainError("series: requires b > 0");
  if (!(p.alpha >= 0.0)) throw DomainError("series: requires alpha >= 0");
  if (!(std::fabs(p.beta) <= 1.0)) throw DomainError("series: requires |beta| <= 1");
}

// ---------------------------------------------------------------------------
// Same-sign power-law tails (beta = -1).
//
// Past i > a the term ratio is r(j) = (j-a)/(j+1) * ((b+j)/(b+j+1))^{alpha+1}.
// With shift d chosen so that the 1/j^2 coefficient of
//   g(j) = log r(j) - sigma log((j+d)/(j+d+1))
// is -sigma/2, u_j = |T_j| (j+d)^sigma is non-increasing from the first
// checked j on, which gives |T_j| <= |T_N| ((N+d)/(j+d))^sigma and
//   sum_{j>N} |T_j| <= |T_N| (N+d) / (sigma - 1).
// ---------------------------------------------------------------------------
class SameSignTail {
 public:
  SameSignTail(double a, double b, double alpha) : a_(a), b_(b), alpha_(alpha), sigma_(a + alpha + 2.0) {
    const double k0 = 0.5 * (1.0 - a * a) + (alpha + 1.0) * (b + 0.5);
    d_ = std::fmax(b, k0 / sigma_);
    min_n_ = 4.0 * (std::fabs(a) + b + alpha + 2.0 + d_);
  }

  double sigma() const { return sigma_; }
  double shift() const { return d_; }

  // The monotonicity argument holds from N on.
  bool valid_from(double n) const {
    if (!(n > a_ + 1.0) || n < min_n_) return false;
    return g(n) < 0.0 && g(2.0 * n) < 0.0;
  }

  // Bound on sum_{j>N} of terms whose magnitude is at most P_j, given P_N.
  double plain(double n, double p_n) const { return p_n * (n + d_) / (sigma_ - 1.0); }

  // Same for terms P_j |h_j| where h_j = sum_{l<j} 1/(a-l) grows logarithmically.
  double with_harmonic(double n, double p_n, double abs_h_n) const {
    const double e = std::fmin(d_, -1.0 - a_);
    double h = abs_h_n + std::log((n + d_) / (n + e));
    h = std::fmax(h, 1.0 / sigma_);
    const double s1 = sigma_ - 1.0;
    return p_n * (n + d_) * (h / s1 + 1.0 / (s1 * s1));
  }

 private:
  double g(double j) const {
    const double log_ratio =
        std::log1p(-(a_ + 1.0) / (j + 1.0)) + (alpha_ + 1.0) * std::log1p(-1.0 / (b_ + j + 1.0));
    return log_ratio - sigma_ * std::log1p(-1.0 / (j + d_ + 1.0));
  }

  double a_, b_, alpha_, sigma_;
  double d_ = 0.0;
  double min_n_ = 0.0;
};

// Alternating tails (beta = +1): magnitudes are non-increasing for j > a and
// j >= (c b - alpha - 1)/sigma, c = -a-1 (Bernoulli's inequality on the ratio).
class AlternatingTail {
 public:
  AlternatingTail(double a, double b, double alpha) : a_(a) {
    const double sigma = a + alpha + 2.0;
    const double c = -a - 1.0;
    start_ = c > 0.0 ? (c * b - alpha - 1.0) / sigma : -kInf;
  }

  // |S - S_N| <= |T_{N+1}| once the terms from N+1 on alternate and shrink.
  bool valid_from(double n) const { return n + 1.0 > a_ && n + 1.0 >= start_; }

 private:
  double a_;
  double start_;
};

// Geometric tails (|beta| < 1): for i > a, |T_{i+1}/T_i| <= |beta| max(1, (i-a)/(i+1)).
double geometric_tail(double a, double abs_beta, double n, double next_term) {
  if (n + 1.0 < a) return kInf;
  const double rho = abs_beta * std::fmax(1.0, (n + 1.0 - a) / (n + 2.0));
  if (!(rho < 1.0)) return kInf;
  return std::fabs(next_term) / (1.0 - rho);
}

// Small dense solve with partial pivoting; used for tail extrapolation.
std::optional<std::vector<long double>> solve_dense(std::vector<std::vector<long double>> m,
                                                    std::vector<long double> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    }
    if (m[piv][col] == 0.0L) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const long double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<long double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    long double acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= m[i][c] * x[c];
    x[i] = acc / m[i][i];
  }
  return x;
}

// Partial sums S_M at M = M_max / 2^k are fitted to
//   S_M = S + M^{1-sigma} (c0 + c0' log M + c1/M + c1' log M / M + c2/M^2 + ...)
// where the log columns are present only for derivative series.
struct SampleSet {
  std::vector<std::int64_t> counts;  // descending: M_max, M_max/2, ...
  std::vector<double> sums;
};

std::optional<double> extrapolate_power_tail(const SampleSet& s, double sigma, bool with_logs) {
  const std::size_t unknowns = with_logs ? 6 : 5;
  if (s.sums.size() < unknowns) return std::nullopt;
  const long double m_max = static_cast<long double>(s.counts.front());
  std::vector<std::vector<long double>> m(unknowns, std::vector<long double>(unknowns));
  std::vector<long double> rhs(unknowns);
  for (std::size_t r = 0; r < unknowns; ++r) {
    const long double scaled = static_cast<long double>(s.counts[r]) / m_max;  // 1, 1/2, 1/4, ...
    const long double z = std::pow(scaled, static_cast<long double>(1.0 - sigma));
    const long double inv = 1.0L / scaled;
    const long double lg = std::log(scaled);
    auto& row = m[r];
    row[0] = 1.0L;
    if (with_logs) {
      row[1] = z;
      row[2] = z * lg;
      row[3] = z * inv;
      row[4] = z * inv * lg;
      row[5] = z * inv * inv;
    } else {
      row[1] = z;
      row[2] = z * inv;
      row[3] = z * inv * inv;
      row[4] = z * inv * inv * inv;
    }
    rhs[r] = s.sums[r];
  }
  auto x = solve_dense(std::move(m), std::move(rhs));
  if (!x || !std::isfinite(static_cast<double>((*x)[0]))) return std::nullopt;
  return static_cast<double>((*x)[0]);
}

// Sample points for the extrapolation fit.
class SampleSchedule {
 public:
  SampleSchedule(std::int64_t max_terms, std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      const std::int64_t c = max_terms >> k;
      if (c < 8) break;
      targets_.push_back(c);
    }
    samples_.sums.assign(targets_.size(), 0.0);
    samples_.counts = targets_;
  }

  void observe(std::int64_t count, double partial) {
    for (std::size_t k = 0; k < targets_.size(); ++k) {
      if (targets_[k] == count) samples_.sums[k] = partial;
    }
  }

  const SampleSet& samples() const { return samples_; }

 private:
  std::vector<std::int64_t> targets_;
  SampleSet samples_;
};

bool should_check(std::int64_t i) { return i < 1024 || (i & 63) == 0; }

EvalResult finite_sum(const SeriesParams& p) {
  const InversePower inv(p.alpha);
  const auto top = static_cast<std::int64_t>(p.a);
  CompensatedSum acc;
  double abs_sum = 0.0;
  double coef = 1.0;
  for (std::int64_t i = 0; i <= top; ++i) {
    const double term = coef * inv(p.b + static_cast<double>(i));
    acc += term;
    abs_sum += std::fabs(term);
    coef *= p.beta * (p.a - static_cast<double>(i)) / static_cast<double>(i + 1);
  }
  EvalResult r;
  r.value = acc.value();
  r.abs_error_bound = 4.0 * kEps * abs_sum * static_cast<double>(top + 1);
  r.terms_used = top + 1;
  r.method = Method::direct;
  return r;
}

[[noreturn]] void throw_divergent(const SeriesParams& p) {
  throw DivergenceError("series diverges: |beta| = 1 requires a + alpha > -1 (a=" + std::to_string(p.a) +
                        ", alpha=" + std::to_string(p.alpha) + ")");
}

}  // namespace

ConvergenceReport convergence_report(const SeriesParams& p) {
  ConvergenceReport rep;
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.beta) || !std::isfinite(p.alpha) ||
      !(p.b > 0.0) || !(p.alpha >= 0.0) || !(std::fabs(p.beta) <= 1.0)) {
    rep.regime = Regime::divergent;
    return rep;
  }
  if (is_nonneg_integer(p.a)) {
    rep.regime = Regime::finite;
    rep.finite_terms = static_cast<std::int64_t>(p.a) + 1;
    return rep;
  }
  if (std::fabs(p.beta) < 1.0) {
    rep.regime = Regime::geometric;
    return rep;
  }
  if (p.a + p.alpha > -1.0) {
    rep.regime = Regime::power_law;
    rep.decay_exponent = p.a + p.alpha + 2.0;
    rep.alternating = p.beta > 0.0;
    return rep;
  }
  rep.regime = Regime::divergent;
  return rep;
}

EvalResult eval_psi_general(const SeriesParams& p, const EvalOptions& opts) {
  validate(p);
  const ConvergenceReport rep = convergence_report(p);
  switch (rep.regime) {
    case Regime::divergent: throw_divergent(p);
    case Regime::finite: return finite_sum(p);
    default: break;
  }

  const InversePower inv(p.alpha);
  const bool geometric = rep.regime == Regime::geometric;
  const bool alternating = rep.alternating;
  const SameSignTail same_sign(p.a, p.b, p.alpha);
  const AlternatingTail alt(p.a, p.b, p.alpha);
  SampleSchedule schedule(opts.max_terms, 5);

  CompensatedSum acc;
  std::array<double, 3> recent{0.0, 0.0, 0.0};  // S_{N-2}, S_{N-1}, S_N
  // extended precision keeps rounding drift in the coefficient recurrence out of long sums
  long double coef = 1.0L;
  const long double beta_l = p.beta;
  const long double a_l = p.a;
  double term = inv(p.b);
  double bound = kInf;
  std::int64_t count = 0;

  auto tail_after = [&](std::int64_t i, double this_term, double next_term) {
    const double n = static_cast<double>(i);
    if (geometric) return geometric_tail(p.a, std::fabs(p.beta), n, next_term);
    if (alternating) return alt.valid_from(n) ? std::fabs(next_term) : kInf;
    return same_sign.valid_from(n) ? same_sign.plain(n, std::fabs(this_term)) : kInf;
  };

  for (std::int64_t i = 0;; ++i) {
    acc += term;
    count = i + 1;
    const double partial = acc.value();
    recent = {recent[1], recent[2], partial};
    schedule.observe(count, partial);

    coef *= beta_l * (a_l - static_cast<long double>(i)) / static_cast<long double>(i + 1);
    const double next = static_cast<double>(coef) * inv(p.b + static_cast<double>(i + 1));

    const bool at_cap = count >= opts.max_terms;
    if (should_check(i) || at_cap) {
      bound = tail_after(i, term, next);
      if (bound <= stop_target(opts, partial)) {
        EvalResult r;
        r.value = partial;
        r.abs_error_bound = bound + 4.0 * kEps * std::fabs(partial);
        r.terms_used = count;
        return r;
      }
    }
    if (at_cap) break;
    term = next;
  }

  const double raw = acc.value();
  if (!std::isfinite(bound)) {
    throw NonConvergenceError("series: no rigorous tail bound within " + std::to_string(opts.max_terms) + " terms",
                              bound);
  }
  EvalResult r;
  r.value = raw;
  r.abs_error_bound = bound + 4.0 * kEps * std::fabs(raw);
  r.terms_used = count;
  r.converged = false;
  if (!opts.accelerate || geometric) return r;

  std::optional<double> acc_value;
  double lo = raw - bound;
  double hi = raw + bound;
  if (alternating) {
    const double d1 = recent[2] - recent[1];
    const double d0 = recent[1] - recent[0];
    if (d1 != d0) acc_value = recent[2] - d1 * d1 / (d1 - d0);
  } else {
    acc_value = extrapolate_power_tail(schedule.samples(), rep.decay_exponent, false);
    // the remaining terms all carry the sign of the last one
    if (term > 0.0) lo = raw; else hi = raw;
  }
  // the true sum lies in [lo, hi], so clamping never moves the estimate away from it
  if (acc_value && std::isfinite(*acc_value)) {
    r.value = std::clamp(*acc_value, lo, hi);
    r.accelerated = true;
  }
  return r;
}

EvalResult eval_phi(double a, double b, double alpha, const EvalOptions& opts) {
  return eval_psi_general(SeriesParams{a, b, -1.0, alpha}, opts);
}

EvalResult eval_phi_tilde(double a, double b, double alpha, const EvalOptions& opts) {
  return eval_psi_general(SeriesParams{a, b, 1.0, alpha}, opts);
}

EvalResult eval_phi_da_series(double a, double b, double alpha, const EvalOptions& opts) {
  const SeriesParams p{a, b, -1.0, alpha};
  validate(p);
  if (!(a + alpha > -1.0)) throw_divergent(p);

  const InversePower inv(alpha);
  const SameSignTail tail(a, b, alpha);
  const double sigma = tail.sigma();
  SampleSchedule schedule(opts.max_terms, 6);

  // prod_i = prod_{j<i} (j-a)/(j+1), except that an exactly vanishing factor
  // (a = j0 integer) is replaced by its a-derivative -1/(j0+1).
  long double prod = 1.0L;
  const long double a_l = a;
  bool has_zero = false;
  CompensatedSum harmonic;  // sum_{j<i, j != j0} 1/(a-j)
  CompensatedSum acc;
  double bound = kInf;
  double last_term = 0.0;
  std::int64_t count = 1;  // the i = 0 term is identically zero

  for (std::int64_t i = 1;; ++i) {
    const double j = static_cast<double>(i - 1);
    if (j - a == 0.0) {
      has_zero = true;
      prod *= -1.0L / (static_cast<long double>(j) + 1.0L);
    } else {
      prod *= (static_cast<long double>(j) - a_l) / (static_cast<long double>(j) + 1.0L);
      harmonic += static_cast<double>(1.0L / (a_l - static_cast<long double>(j)));
    }
    const double power = inv(b + static_cast<double>(i));
    const double h = harmonic.value();
    const double prod_d = static_cast<double>(prod);
    const double term = (has_zero ? prod_d : prod_d * h) * power;
    last_term = term;
    acc += term;
    count = i + 1;
    const double partial = acc.value();
    schedule.observe(count, partial);

    const bool at_cap = count >= opts.max_terms;
    if (should_check(i) || at_cap) {
      const double n = static_cast<double>(i);
      if (has_zero) {
        bound = (n > a && tail.valid_from(n)) ? tail.plain(n, std::fabs(term)) : kInf;
      } else {
        bound = tail.valid_from(n) ? tail.with_harmonic(n, std::fabs(prod_d * power), std::fabs(h)) : kInf;
      }
      if (bound <= stop_target(opts, partial)) {
        EvalResult r;
        r.value = partial;
        r.abs_error_bound = bound + 4.0 * kEps * std::fabs(partial);
        r.terms_used = count;
        return r;
      }
    }
    if (at_cap) break;
  }

  const double raw = acc.value();
  if (!std::isfinite(bound)) {
    throw NonConvergenceError("phi_da: no rigorous tail bound within " + std::to_string(opts.max_terms) + " terms",
                              bound);
  }
  EvalResult r;
  r.value = raw;
  r.abs_error_bound = bound + 4.0 * kEps * std::fabs(raw);
  r.terms_used = count;
  r.converged = false;
  if (!opts.accelerate) return r;
  const auto acc_value = extrapolate_power_tail(schedule.samples(), sigma, !has_zero);
  double lo = raw - bound;
  double hi = raw + bound;
  if (last_term > 0.0) lo = raw; else hi = raw;
  // the true sum lies in [lo, hi], so clamping never moves the estimate away from it
  if (acc_value && std::isfinite(*acc_value)) {
    r.value = std::clamp(*acc_value, lo, hi);
    r.accelerated = true;
  }
  return r;
}

EvalResult eval_phi_da_direct(double a, double b, int n, const EvalOptions& opts) {
  if (n < 0) throw DomainError("phi_da: requires n >= 0");
  return eval_phi_da_series(a, b, static_cast<double>(n), opts);
}

}  // namespace rseries
