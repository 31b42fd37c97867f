#include "rseries/coeff_triangle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rseries/compensated_sum.hpp"
#include "rseries/errors.hpp"

namespace rseries {

CoeffTriangle CoeffTriangle::build(double p, double b, int depth, TriangleRule rule) {
  if (depth < 1 || depth > kMaxDepth) {
    throw DomainError("coeff_triangle: depth must be in [1, 64], got " + std::to_string(depth));
  }
  if (!std::isfinite(p) || !std::isfinite(b)) throw DomainError("coeff_triangle: non-finite p or b");

  CoeffTriangle tri(p, b, depth);
  tri.cell(1, 1) = 1.0;
  for (int m = 1; m < depth; ++m) {
    tri.cell(m + 1, 1) = b * tri.cell(m, 1);
    for (int k = 2; k <= m; ++k) {
      const double left = rule == TriangleRule::row_m ? tri.cell(m, k - 1) : tri.cell(m + 1, k - 1);
      tri.cell(m + 1, k) = -(p - k + 2) * left + (b + k - 1) * tri.cell(m, k);
    }
    tri.cell(m + 1, m + 1) = -(p - m + 1) * tri.cell(m, m);
  }
  return tri;
}

double CoeffTriangle::at(int m, int k) const {
  if (m < 1 || m > depth_ || k < 1 || k > m) {
    throw DomainError("coeff_triangle: index (" + std::to_string(m) + ", " + std::to_string(k) + ") out of range");
  }
  return cells_[(m - 1) * depth_ + (k - 1)];
}

std::span<const double> CoeffTriangle::row(int m) const {
  if (m < 1 || m > depth_) throw DomainError("coeff_triangle: row out of range");
  return {cells_.data() + (m - 1) * depth_, static_cast<std::size_t>(m)};
}

double lhs_poly(const CoeffTriangle& tri, int m, double t) {
  if (m < 0 || m + 1 > tri.depth()) throw DomainError("lhs_poly: m must satisfy 0 <= m < depth");
  const double one_minus_t = 1.0 - t;
  CompensatedSum acc;
  for (int k = 1; k <= m + 1; ++k) {
    const double coeff = tri.at(m + 1, k);
    if (coeff == 0.0) continue;
    const double expo = tri.p() - k + 1;
    if (one_minus_t == 0.0 && expo < 0.0) {
      throw DomainError("lhs_poly: singular at t = 1 with negative exponent of (1-t)");
    }
    acc += coeff * std::pow(t, k - 1) * std::pow(one_minus_t, expo);
  }
  return acc.value();
}

EvalResult rhs_series(double p, double b, int m, double t) {
  const bool terminating = p >= 0.0 && p == std::floor(p) && p < 1e6;
  if (!terminating && !(std::fabs(t) < 1.0)) throw DomainError("rhs_series: requires |t| < 1");
  if (!std::isfinite(t)) throw DomainError("rhs_series: non-finite t");
  if (m < 0) throw DomainError("rhs_series: requires m >= 0");
  // Terms can grow far past the sum before decaying, so accumulate in extended precision.
  long double sum = 0.0L;
  long double comp = 0.0L;
  auto add = [&](long double x) {
    const long double t2 = sum + x;
    comp += std::fabs(sum) >= std::fabs(x) ? (sum - t2) + x : (x - t2) + sum;
    sum = t2;
  };
  auto current = [&] { return static_cast<double>(sum + comp); };
  long double coef = 1.0L;  // (-1)^i C(p,i) t^i
  EvalResult r;
  constexpr std::int64_t kCap = 10'000'000;
  for (std::int64_t i = 0; i < kCap; ++i) {
    const long double x = static_cast<long double>(b) + static_cast<long double>(i);
    add(coef * std::pow(x, m));
    coef *= -static_cast<long double>(t) * (static_cast<long double>(p) - i) / static_cast<long double>(i + 1);
    r.terms_used = i + 1;
    if (coef == 0.0L && terminating) {
      r.value = current();
      r.abs_error_bound = 8.0 * std::numeric_limits<double>::epsilon() * std::fabs(r.value);
      return r;
    }
    const double n = static_cast<double>(i + 1);  // index of the next term
    if (n < p) continue;
    // ratio of successive magnitudes beyond index n
    const double xn = b + n;
    if (xn <= 0.0) continue;
    const double rho = std::fabs(t) * std::fmax(1.0, (n - p) / (n + 1.0)) * std::pow(1.0 + 1.0 / xn, m);
    if (!(rho < 1.0)) continue;
    const double tail = std::fabs(static_cast<double>(coef) * std::pow(xn, m)) / (1.0 - rho);
    if (tail <= std::fmax(1e-13, 1e-15 * std::fabs(current()))) {
      r.value = current();
      r.abs_error_bound = tail;
      return r;
    }
  }
  throw NonConvergenceError("rhs_series: iteration cap reached", std::numeric_limits<double>::infinity());
}

}  // namespace rseries
