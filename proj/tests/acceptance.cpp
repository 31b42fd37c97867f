// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rseries/coeff_triangle.hpp"
#include "rseries/compensated_sum.hpp"
#include "rseries/identities.hpp"
#include "rseries/quadrature.hpp"
#include "rseries/series.hpp"
#include "rseries/special_fn.hpp"
#include "rseries/suites.hpp"

using namespace rseries;
using constants::pi;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return ok_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

double rel(double x, double ref) { return std::fabs(x - ref) / std::fabs(ref); }

const double kPhi0 = beta_f(0.0, -0.5, 0.25);

double f1(double a, double b, double alpha) { return oracle_value({IntegralForm::F1, a, b, alpha}).value; }

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(RSERIES_BIN) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  if (!WIFEXITED(status)) out += "<abnormal exit>";
  return out;
}

bool has_errata(const std::vector<ErrataEntry>& ledger, const std::string& key) {
  for (const auto& e : ledger) {
    if (e.key == key) return true;
  }
  return false;
}

double inverse_factor_direct(double b, int n) {
  constexpr int kTerms = 20000;
  CompensatedSum acc;
  for (int j = kTerms; j >= 1; --j) acc += 1.0 / (j * std::pow(b + j, n));
  const double x0 = kTerms + 0.5;
  acc += integrate_unit([=](double t, double) { return std::pow(t, n - 1) / std::pow(b * t + x0, n); }).value;
  return acc.value();
}

void c1(Check& c) {
  const double ref = pi * kPhi0;
  const double series = rseries::gamma(2.0) * ramanujan_phi(-0.5, 0.25, 1).value;
  const double quad = f1(-0.5, 0.25, 1.0);
  c.expect(rel(series, ref) < 1e-8, "series route " + num(series));
  c.expect(rel(quad, ref) < 1e-8, "quadrature route " + num(quad));
  c.note("pi Gamma(1/4)^2/sqrt(2pi) = " + num(ref) + ", series rel " + num(rel(series, ref)) + ", quadrature rel " +
         num(rel(quad, ref)));
}

void c2(Check& c) {
  const double ref = (pi * pi + 16.0 * s_prime(2)) * kPhi0;
  const double series = rseries::gamma(3.0) * ramanujan_phi(-0.5, 0.25, 2).value;
  const double quad = f1(-0.5, 0.25, 2.0);
  c.expect(rel(series, ref) < 1e-8, "series route " + num(series));
  c.expect(rel(quad, ref) < 1e-8, "quadrature route " + num(quad));
  c.note("reference " + num(ref) + ", series rel " + num(rel(series, ref)) + ", quadrature rel " + num(rel(quad, ref)));
}

void c3(Check& c, const std::vector<ErrataEntry>& ledger) {
  const double recursion = kPhi0 * (pi * pi * pi + 48.0 * pi * s_prime(2) + 128.0 * s_prime(3));
  const double printed = kPhi0 * (5.0 * pi * pi * pi + 48.0 * s_prime(2) + 128.0 * s_prime(3));
  const double quad = f1(-0.5, 0.25, 3.0);
  c.expect(rel(quad, recursion) < 1e-7, "quadrature " + num(quad) + " vs recursion form " + num(recursion));
  c.expect(rel(quad, printed) > 1e-7, "printed reading unexpectedly agrees");
  c.expect(std::fabs(6.0 * ramanujan_phi(-0.5, 0.25, 3).value - recursion) < 1e-7 * recursion, "recursion value");
  c.expect(has_errata(ledger, "§4 x^3 example"), "errata entry missing");
  c.note("quadrature " + num(quad) + ", recursion form rel " + num(rel(quad, recursion)) + ", printed reading " +
         num(printed) + " (rel " + num(rel(quad, printed)) + ")");
}

void c4(Check& c) {
  double worst = 0.0;
  for (int m = 0; m <= 2; ++m) {
    for (double b : {0.5, 1.0, 2.0}) {
      for (double mu : {0.5, 1.0}) {
        const auto r = master_shift(-1.0, b, -1.0, mu, m);
        worst = std::fmax(worst, r.residual);
        c.expect(r.residual < 1e-9, r.id + " residual " + num(r.residual));
      }
    }
  }
  // zeta reductions for the first three shifts
  for (double b : {0.5, 1.0, 2.0}) {
    for (double mu : {0.5, 1.0}) {
      const double z1 = hurwitz_zeta(mu + 1, b);
      const double z2 = hurwitz_zeta(mu + 2, b);
      const double z3 = hurwitz_zeta(mu + 3, b);
      c.expect(rel(eval_phi(-1.0, b, mu).value, z1) < 1e-9, "phi(-1,b,mu) = zeta(mu+1,b)");
      c.expect(rel(eval_phi(-2.0, b + 1, mu + 1).value, z1 - b * z2) < 1e-9, "m=1 example formula");
      const double m2 = eval_phi(-3.0, b + 2, mu + 2).value;
      c.expect(rel(m2, 0.5 * (z1 - (2 * b + 1) * z2 + b * (b + 1) * z3)) < 1e-9, "m=2 formula with factor 1/2");
    }
  }
  c.note("worst master_shift residual " + num(worst) +
         "; the m=2 example formula holds with an overall factor 1/2 (see errata '(4.4) m=2 example')");
}

void c5(Check& c) {
  const auto r = master_shift(-0.5, 0.25, -1.0, 0.0, 1, 1e-7);
  c.expect(r.pass, "worked example residual " + num(r.residual));
  const double ref = 2.0 * (1.0 - pi / 4.0) * kPhi0;
  const double quad = f1(-1.5, 1.25, 1.0);
  c.expect(rel(quad, ref) < 1e-6, "quadrature " + num(quad) + " vs " + num(ref));
  const auto tri = CoeffTriangle::build(-0.5, 0.25, 2);
  c.expect(tri.at(2, 1) == 0.25 && tri.at(2, 2) == 0.5, "A^(2)(-1/2,1/4) = [1/4, 1/2]");
  c.note("identity residual " + num(r.residual) + ", quadrature rel " + num(rel(quad, ref)));
}

void c6(Check& c) {
  double worst = 0.0;
  for (double p : {-1.0, -0.5, 0.5, 2.0}) {
    for (double b : {0.25, 1.0, 3.0}) {
      const auto tri = CoeffTriangle::build(p, b, 9);
      for (int m = 0; m <= 8; ++m) {
        for (double t : {-0.6, -0.1, 0.2, 0.7}) {
          const double lhs = lhs_poly(tri, m, t);
          const double rhs = rhs_series(p, b, m, t).value;
          const double res = std::fabs(lhs - rhs) / (1.0 + std::fabs(rhs));
          worst = std::fmax(worst, res);
          c.expect(res < 1e-10, "p=" + num(p) + " b=" + num(b) + " m=" + std::to_string(m) + " t=" + num(t));
        }
      }
      c.expect(tri.at(2, 1) == b && tri.at(2, 2) == -p, "A^(2) row");
      c.expect(tri.at(3, 1) == b * b && tri.at(3, 2) == -(2 * b + 1) * p && tri.at(3, 3) == p * (p - 1), "A^(3) row");
    }
  }
  c.note("worst residual |lhs-rhs|/(1+|rhs|) " + num(worst));
}

void c7(Check& c) {
  double worst = 0.0;
  for (double b : {0.5, 1.0, 2.0}) {
    for (double alpha : {1.0, 2.0}) {
      const auto r = eta_reduction(b, alpha);
      worst = std::fmax(worst, r.residual);
      c.expect(r.residual < 1e-11, r.id + " residual " + num(r.residual));
    }
  }
  c.note("worst residual " + num(worst));
}

// Central difference of eval_phi in a at steps 2e-5 and 4e-5, one Richardson step.
// Tight targets keep the stopping point from jumping between a +- h.
double phi_fd(double a, double b, int n) {
  EvalOptions tight;
  tight.abs_target = 1e-15;
  tight.rel_target = 1e-16;
  auto central = [&](double h) {
    return (eval_phi(a + h, b, n, tight).value - eval_phi(a - h, b, n, tight).value) / (2 * h);
  };
  constexpr double h = 2e-5;
  return (4.0 * central(h) - central(2.0 * h)) / 3.0;
}

void c8(Check& c) {
  double worst_direct = 0.0;
  double worst_fd = 0.0;
  for (double a : {-0.9, -0.5, -0.25, 0.5, 2.0}) {
    for (double b : {0.25, 1.0, 2.5}) {
      for (int n = 0; n <= 5; ++n) {
        const double closed = phi_da_closed(a, b, n);
        const double direct = eval_phi_da_direct(a, b, n).value;
        const double fd = phi_fd(a, b, n);
        const std::string tag = "(" + num(a) + "," + num(b) + "," + std::to_string(n) + ")";
        worst_direct = std::fmax(worst_direct, std::fabs(closed - direct));
        worst_fd = std::fmax(worst_fd, std::fabs(closed - fd));
        c.expect(std::fabs(closed - direct) < 1e-6, "direct " + tag + " " + num(closed - direct));
        c.expect(std::fabs(closed - fd) < 1e-6, "finite difference " + tag + " " + num(closed - fd));
      }
    }
  }
  const double example = (constants::ln2 - pi / 2.0) * kPhi0;
  const double closed = phi_da_closed(-0.5, 0.25, 0);
  c.expect(std::fabs(closed - example) < 1e-7, "first derivative example " + num(closed));
  c.expect(std::fabs(example + 4.6025) < 1e-4, "example value " + num(example));
  c.note("worst |closed-direct| " + num(worst_direct) + ", worst |closed-fd| " + num(worst_fd) + ", example " +
         num(closed));
}

void c9(Check& c, const std::vector<ErrataEntry>& ledger) {
  const double quad = oracle_value({IntegralForm::F4, -0.5, 0.25, 1.0}).value;
  const double corrected = -phi_da_closed(-0.5, 0.25, 1);
  c.expect(quad > 0.0, "integral should be positive");
  c.expect(std::fabs(quad - corrected) < 1e-6, "quadrature " + num(quad) + " vs " + num(corrected));
  c.expect(has_errata(ledger, "§5 second example"), "errata entry missing");
  c.note("quadrature " + num(quad) + " = -phi'_a(-1/2,1/4,1) = " + num(corrected));
}

void c10(Check& c) {
  double worst = 0.0;
  for (double b : {0.5, 1.0, 2.0}) {
    for (int n = 1; n <= 3; ++n) {
      const double direct = inverse_factor_direct(b, n);
      const double closed = -phi_da_closed(0.0, b, n - 1);
      const double expansion = -phi_da_zero_expansion(b, n - 1);
      worst = std::fmax(worst, std::fmax(std::fabs(direct - closed), std::fabs(direct - expansion)));
      c.expect(std::fabs(direct - closed) < 1e-9, "closed b=" + num(b) + " n=" + std::to_string(n));
      c.expect(std::fabs(direct - expansion) < 1e-9, "expansion b=" + num(b) + " n=" + std::to_string(n));
    }
  }
  c.expect(std::fabs(inverse_factor_direct(1.0, 2) - (2.0 - pi * pi / 6.0)) < 1e-9, "b=1, n=2 value");
  c.note("worst residual " + num(worst) + " (sum sign is opposite to the printed phi'_a form)");
}

void c11(Check& c) {
  double worst = 0.0;
  for (int a = 1; a <= 3; ++a) {
    for (double w : {a + 1.0, a + 2.0}) {
      for (double alpha : {0.0, 1.0}) {
        const auto r = trig_lambda(a, w, alpha);
        const double oc = oracle_value({IntegralForm::F7, double(a), 1.0, alpha, 0.0, w}).value;
        const double os = oracle_value({IntegralForm::F8, double(a), 1.0, alpha, 0.0, w}).value;
        worst = std::fmax(worst, std::fmax(std::fabs(r.lambda_c - oc), std::fabs(r.lambda_s - os)));
        c.expect(std::fabs(r.lambda_c - oc) < 1e-3 && std::fabs(r.lambda_s - os) < 1e-3,
                 "(" + std::to_string(a) + "," + num(w) + "," + num(alpha) + ")");
      }
    }
  }
  auto near = [](double x, double y) { return std::fabs(x - y) < 1e-12; };
  c.expect(near(trig_lambda(1, 2, 0).lambda_c, -1.0 / 3) && near(trig_lambda(1, 2, 0).lambda_s, 0), "(1,2,0)");
  c.expect(near(trig_lambda(1, 2, 1).lambda_c, 0) && near(trig_lambda(1, 2, 1).lambda_s, -4.0 / 9), "(1,2,1)");
  c.expect(near(trig_lambda(2, 3, 0).lambda_c, 0) && near(trig_lambda(2, 3, 0).lambda_s, -2.0 / 15), "(2,3,0)");
  c.expect(near(trig_cos(1, 2, 0).lambda_s, 2.0 / 3), "cos (1,2,0)");
  c.expect(near(trig_cos(2, 3, 0).lambda_s, 7.0 / 15), "cos (2,3,0)");
  c.note("worst |closed-oracle| " + num(worst) + " with the corrected phase; printed phase gives +1/15 at (1,2,0)");
}

void c12(Check& c) {
  double worst = 0.0;
  double worst_corrected = 0.0;
  for (double b : {0.25, 0.5, 0.75}) {
    for (double beta : {0.0, 0.25, 0.5}) {
      const auto printed = two_sided_family(b, beta, 0, TwoSidedReading::printed);
      const auto fixed = two_sided_family(b, beta, 0, TwoSidedReading::corrected);
      worst = std::fmax(worst, printed.residual);
      worst_corrected = std::fmax(worst_corrected, fixed.residual);
      c.expect(printed.pass, printed.id + " rel " + num(printed.residual));
    }
  }
  const double oracle = two_sided_oracle(0.5, 0.5, 0).value;
  c.expect(rel(oracle, 2.0 * pi * pi * pi) < 1e-6, "b=1/2, beta=1/2: quadrature " + num(oracle) + " vs 2pi^3");
  c.note("worst printed-formula rel residual " + num(worst) + "; corrected form worst " + num(worst_corrected));
}

void c13(Check& c) {
  const auto records = run_suite("all", SuiteOptions{1, std::nullopt});
  std::size_t failed = 0;
  for (const auto& r : records) {
    if (!r.pass) {
      ++failed;
      c.expect(false, r.id);
    }
  }
  c.expect(!records.empty(), "suite is empty");
  c.note(std::to_string(records.size()) + " suite records, " + std::to_string(failed) + " failed");

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> da(-0.95, 3.0);
  std::uniform_real_distribution<double> db(0.1, 3.0);
  std::uniform_real_distribution<double> dalpha(0.0, 2.0);
  std::uniform_real_distribution<double> dbeta(-1.0, 1.0);
  EvalOptions small;
  small.max_terms = 20000;
  EvalOptions big = small;
  big.max_terms = 80000;
  int bad = 0;
  for (int i = 0; i < 100;) {
    SeriesParams sp{da(rng), db(rng), i % 3 == 0 ? -1.0 : i % 3 == 1 ? 1.0 : dbeta(rng), dalpha(rng)};
    if (convergence_report(sp).regime == Regime::divergent) continue;
    const auto v = eval_psi_general(sp, small);
    const auto ref = eval_psi_general(sp, big);
    if (std::fabs(v.value - ref.value) > v.abs_error_bound) ++bad;
    ++i;
  }
  c.expect(bad == 0, std::to_string(bad) + " error bounds violated");

  const std::string one = run_cli("verify twosided --format jsonl --workers 1");
  const std::string three = run_cli("verify twosided --format jsonl --workers 3");
  c.expect(!one.empty() && one == three, "verify output differs across worker counts");
  const std::string t1 = run_cli("table phi --a -0.5:0.5:0.25 --b 0.25:2.25:0.5 --n 0..1 --format csv --workers 1");
  const std::string t3 = run_cli("table phi --a -0.5:0.5:0.25 --b 0.25:2.25:0.5 --n 0..1 --format csv --workers 3");
  c.expect(!t1.empty() && t1 == t3, "table output differs across worker counts");
  c.note("100 random error bounds checked; CLI output identical for 1 and 3 workers");
}

}  // namespace

int main() {
  const auto ledger = errata_ledger();
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "x example: series and quadrature vs pi Gamma(1/4)^2/sqrt(2pi)", c1},
      {2, "x^2 example: series and quadrature vs (pi^2 + 16 S'_2) Gamma(1/4)^2/sqrt(2pi)", c2},
      {3, "x^3 example: quadrature vs recursion form, printed reading rejected", [&](Check& c) { c3(c, ledger); }},
      {4, "p = -1 shift identities and zeta reductions", c4},
      {5, "Case 3 worked example and its quadrature", c5},
      {6, "coefficient identity over the triangle grid", c6},
      {7, "eta reduction of phi-tilde(-1,b,alpha)", c7},
      {8, "derivative in a: closed form vs summation and finite difference", c8},
      {9, "log(1-t) log t integral sign", [&](Check& c) { c9(c, ledger); }},
      {10, "sum 1/(j (b+j)^n) vs derivative closed form and expansion", c10},
      {11, "trigonometric closed forms vs Abel oracle", c11},
      {12, "two-sided family, m = 0 formula as printed", c12},
      {13, "property suites, bound truth, CLI determinism", c13},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title << '\n';
    for (const auto& n : c.notes()) std::cout << "      " << n << '\n';
    const std::size_t shown = std::min<std::size_t>(c.failures().size(), 6);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "      failed: " << c.failures()[i] << '\n';
    if (c.failures().size() > shown) std::cout << "      ... " << c.failures().size() - shown << " more\n";
    std::cout.flush();
    failed += c.ok() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
