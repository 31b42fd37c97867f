#pragma once

#include <span>
#include <vector>

#include "rseries/series.hpp"

// Triangle A_k^{(m)}(p, b), 1 <= k <= m, expanding
//   sum_i (-1)^i C(p,i) (b+i)^{m-1} t^i = sum_k A_k^{(m)} t^{k-1} (1-t)^{p-k+1}.

namespace rseries {

enum class TriangleRule {
  // middle entries built from row m:  -(p-k+2) A_{k-1}^{(m)} + (b+k-1) A_k^{(m)}
  row_m,
  // literal reading with A_{k-1}^{(m+1)} in the middle rule; kept for the errata check
  row_m_plus_1,
};

class CoeffTriangle {
 public:
  static constexpr int kMaxDepth = 64;

  static CoeffTriangle build(double p, double b, int depth, TriangleRule rule = TriangleRule::row_m);

  double p() const { return p_; }
  double b() const { return b_; }
  int depth() const { return depth_; }

  /// A_k^{(m)}, 1-based.
  double at(int m, int k) const;
  std::span<const double> row(int m) const;

 private:
  CoeffTriangle(double p, double b, int depth) : p_(p), b_(b), depth_(depth), cells_(depth * depth, 0.0) {}
  double& cell(int m, int k) { return cells_[(m - 1) * depth_ + (k - 1)]; }

  double p_;
  double b_;
  int depth_;
  std::vector<double> cells_;
};

/// sum_{k=1}^{m+1} A_k^{(m+1)} t^{k-1} (1-t)^{p-k+1}. Requires m + 1 <= depth.
double lhs_poly(const CoeffTriangle& tri, int m, double t);

/// sum_i (-1)^i C(p,i) (b+i)^m t^i for |t| < 1 (any t when p is a
/// non-negative integer), tail bounded below 1e-13.
EvalResult rhs_series(double p, double b, int m, double t);

}  // namespace rseries
