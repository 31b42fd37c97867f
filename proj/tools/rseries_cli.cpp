// rseries: evaluate the binomial series, run verification suites, print tables.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rseries/coeff_triangle.hpp"
#include "rseries/errors.hpp"
#include "rseries/parallel.hpp"
#include "rseries/quadrature.hpp"
#include "rseries/report.hpp"
#include "rseries/series.hpp"
#include "rseries/special_fn.hpp"
#include "rseries/suites.hpp"

namespace {

using namespace rseries;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kParamNames = {"a", "b", "beta", "alpha", "n", "m", "s", "q", "r", "w", "v", "p", "mu"};

struct Config {
  std::string format = "text";
  std::optional<double> tol;
  std::optional<int> workers;
  std::map<std::string, std::string> params;
  std::string what;
  std::string form;
  int k = 1;
  bool sine = false;
  bool printed_rule = false;
};

double parse_real(const std::string& name, const std::string& text) {
  double x = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc() || ptr != last || !std::isfinite(x)) {
    throw UsageError("--" + name + ": not a number: '" + text + "'");
  }
  return x;
}

int parse_int(const std::string& name, const std::string& text) {
  const double x = parse_real(name, text);
  if (x != std::floor(x) || std::fabs(x) > 1e9) throw UsageError("--" + name + ": expected an integer, got '" + text + "'");
  return static_cast<int>(x);
}

// "x", "lo:hi:step" (inclusive) or "lo..hi" (unit step).
std::vector<double> parse_range(const std::string& name, const std::string& text) {
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = parse_int(name, text.substr(0, dots));
    const int hi = parse_int(name, text.substr(dots + 2));
    if (hi < lo) throw UsageError("--" + name + ": empty range '" + text + "'");
    std::vector<double> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
  }
  const auto c1 = text.find(':', 1);
  if (c1 == std::string::npos) return {parse_real(name, text)};
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw UsageError("--" + name + ": expected lo:hi:step, got '" + text + "'");
  const double lo = parse_real(name, text.substr(0, c1));
  const double hi = parse_real(name, text.substr(c1 + 1, c2 - c1 - 1));
  const double step = parse_real(name, text.substr(c2 + 1));
  if (!(step > 0.0) || hi < lo) throw UsageError("--" + name + ": bad range '" + text + "'");
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (count > 100000) throw UsageError("--" + name + ": range too long");
  std::vector<double> v;
  for (long i = 0; i < count; ++i) v.push_back(lo + static_cast<double>(i) * step);
  return v;
}

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& raw) : raw_(raw) {}

  bool has(const std::string& n) const { return raw_.count(n) > 0; }

  double real(const std::string& n) const {
    if (!has(n)) throw UsageError("missing --" + n);
    return parse_real(n, raw_.at(n));
  }
  double real(const std::string& n, double fallback) const { return has(n) ? real(n) : fallback; }
  int integer(const std::string& n) const {
    if (!has(n)) throw UsageError("missing --" + n);
    return parse_int(n, raw_.at(n));
  }
  int integer(const std::string& n, int fallback) const { return has(n) ? integer(n) : fallback; }

  // alpha, or n / mu standing in for it
  double power() const {
    if (has("alpha")) return real("alpha");
    if (has("n")) return integer("n");
    if (has("mu")) return real("mu");
    return 0.0;
  }

 private:
  const std::map<std::string, std::string>& raw_;
};

IntegralForm parse_form(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(IntegralForm::F12); ++i) {
    const auto f = static_cast<IntegralForm>(i);
    if (to_string(f) == s) return f;
  }
  throw UsageError("--form: expected F1..F12, got '" + s + "'");
}

EvalResult evaluate(const std::string& what, const Params& p, const Config& cfg) {
  if (what == "phi") return eval_phi(p.real("a"), p.real("b", 1.0), p.power());
  if (what == "phitilde") return eval_phi_tilde(p.real("a"), p.real("b", 1.0), p.power());
  if (what == "psi") {
    return eval_psi_general(SeriesParams{p.real("a"), p.real("b", 1.0), p.real("beta", -1.0), p.power()});
  }
  if (what == "phida") return eval_phi_da_direct(p.real("a"), p.real("b", 1.0), p.integer("n", 0));
  if (what == "zeta") {
    EvalResult r;
    r.value = hurwitz_zeta(p.real("s"), p.real("q", 1.0), &r.abs_error_bound);
    r.method = Method::closed_form;
    return r;
  }
  if (what == "lerch") {
    EvalResult r;
    r.value = lerch_phi(p.real("beta"), p.real("s"), p.real("b", 1.0));
    r.abs_error_bound = 1e-16 * std::fabs(r.value);
    r.method = Method::direct;
    return r;
  }
  if (what == "sprime") {
    EvalResult r;
    r.value = s_prime(p.integer("r"));
    r.method = Method::closed_form;
    return r;
  }
  if (what == "integral") {
    if (cfg.form.empty()) throw UsageError("integral needs --form F1..F12");
    IntegralSpec spec;
    spec.form = parse_form(cfg.form);
    spec.a = p.real("a", 0.0);
    spec.b = p.real("b", 1.0);
    spec.alpha = p.power();
    spec.beta = p.real("beta", 0.0);
    spec.w = p.has("w") ? p.real("w") : p.real("v", 0.0);
    spec.k = cfg.k;
    spec.sine_part = cfg.sine;
    return oracle_value(spec);
  }
  throw UsageError("unknown quantity '" + what + "'");
}

Format format_of(const Config& cfg) {
  const auto f = parse_format(cfg.format);
  if (!f) throw UsageError("--format: expected text, csv or jsonl");
  return *f;
}

int resolve_workers(const Config& cfg) {
  int w = 1;
  if (cfg.workers) {
    w = *cfg.workers;
  } else if (const char* env = std::getenv("RSERIES_WORKERS"); env != nullptr && *env != '\0') {
    w = parse_int("workers", env);
  }
  if (w < 1) throw UsageError("--workers must be at least 1");
  return w;
}

void check_tol(const Config& cfg) {
  if (cfg.tol && !(*cfg.tol > 0.0)) throw UsageError("--tol must be positive");
}

int cmd_eval(const Config& cfg) {
  const Format f = format_of(cfg);
  const EvalResult r = evaluate(cfg.what, Params(cfg.params), cfg);
  write_eval(std::cout, cfg.what, r, f);
  return kOk;
}

int cmd_verify(const Config& cfg) {
  const Format f = format_of(cfg);
  check_tol(cfg);
  SuiteOptions opts;
  opts.workers = resolve_workers(cfg);
  opts.tolerance = cfg.tol;
  const auto records = run_suite(cfg.what, opts);
  write_records(std::cout, records, f);
  return summarize(records).ok() ? kOk : kFail;
}

struct TableSpec {
  std::vector<std::string> columns;
  std::function<EvalResult(const std::vector<double>&)> eval;
  std::function<bool(const std::vector<double>&)> divergent;
};

TableSpec table_spec(const std::string& what, const Params& p) {
  const std::string power = p.has("alpha") ? "alpha" : p.has("n") ? "n" : p.has("mu") ? "mu" : "alpha";
  auto series_divergent = [](double a, double b, double beta, double alpha) {
    if (!(b > 0.0)) return false;
    return convergence_report(SeriesParams{a, b, beta, alpha}).regime == Regime::divergent;
  };
  if (what == "phi" || what == "phitilde") {
    const double beta = what == "phi" ? -1.0 : 1.0;
    return {{"a", "b", power},
            [beta](const std::vector<double>& v) { return eval_psi_general(SeriesParams{v[0], v[1], beta, v[2]}); },
            [=](const std::vector<double>& v) { return series_divergent(v[0], v[1], beta, v[2]); }};
  }
  if (what == "psi") {
    return {{"a", "b", "beta", power},
            [](const std::vector<double>& v) { return eval_psi_general(SeriesParams{v[0], v[1], v[2], v[3]}); },
            [=](const std::vector<double>& v) { return series_divergent(v[0], v[1], v[2], v[3]); }};
  }
  if (what == "phida") {
    return {{"a", "b", "n"},
            [](const std::vector<double>& v) {
              if (v[2] != std::floor(v[2])) throw DomainError("phida: n must be an integer");
              return eval_phi_da_direct(v[0], v[1], static_cast<int>(v[2]));
            },
            [=](const std::vector<double>& v) { return series_divergent(v[0], v[1], -1.0, v[2]); }};
  }
  if (what == "zeta") {
    return {{"s", "q"},
            [](const std::vector<double>& v) {
              EvalResult r;
              r.value = hurwitz_zeta(v[0], v[1], &r.abs_error_bound);
              r.method = Method::closed_form;
              return r;
            },
            [](const std::vector<double>& v) { return v[0] <= 1.0; }};
  }
  if (what == "lerch") {
    return {{"beta", "s", "b"},
            [](const std::vector<double>& v) {
              EvalResult r;
              r.value = lerch_phi(v[0], v[1], v[2]);
              r.abs_error_bound = 1e-16 * std::fabs(r.value);
              return r;
            },
            [](const std::vector<double>&) { return false; }};
  }
  if (what == "sprime") {
    return {{"r"},
            [](const std::vector<double>& v) {
              if (v[0] != std::floor(v[0])) throw DomainError("sprime: r must be an integer");
              EvalResult r;
              r.value = s_prime(static_cast<int>(v[0]));
              r.method = Method::closed_form;
              return r;
            },
            [](const std::vector<double>&) { return false; }};
  }
  throw UsageError("table: unknown series '" + what + "'");
}

int cmd_table(const Config& cfg) {
  const Format f = format_of(cfg);
  const Params p(cfg.params);
  const TableSpec spec = table_spec(cfg.what, p);
  const std::map<std::string, double> defaults = {{"b", 1.0}, {"alpha", 0.0}, {"n", 0.0}, {"mu", 0.0}, {"q", 1.0}};

  std::vector<std::vector<double>> axes;
  for (const auto& c : spec.columns) {
    if (p.has(c)) {
      axes.push_back(parse_range(c, cfg.params.at(c)));
    } else if (defaults.count(c) > 0) {
      axes.push_back({defaults.at(c)});
    } else {
      throw UsageError("table " + cfg.what + ": missing --" + c);
    }
  }

  // Cartesian product, first column outermost.
  std::vector<std::vector<double>> points(1);
  for (const auto& axis : axes) {
    std::vector<std::vector<double>> next;
    for (const auto& prefix : points) {
      for (double x : axis) {
        next.push_back(prefix);
        next.back().push_back(x);
      }
    }
    points = std::move(next);
  }

  const auto rows = parallel_map<TableRow>(points.size(), resolve_workers(cfg), [&](std::size_t i) {
    TableRow row;
    row.params = points[i];
    try {
      if (spec.divergent(points[i])) {
        row.status = "divergent";
        return row;
      }
      row.result = spec.eval(points[i]);
      row.status = row.result.converged ? "ok" : "capped";
    } catch (const DivergenceError& e) {
      row.status = "divergent";
      row.message = e.what();
    } catch (const NonConvergenceError& e) {
      row.status = "capped";
      row.result.value = std::nan("");
      row.result.abs_error_bound = e.achieved_bound();
      row.message = e.what();
    } catch (const std::exception& e) {
      row.status = "domain-error";
      row.message = e.what();
    }
    return row;
  });
  write_table(std::cout, spec.columns, rows, f);
  return kOk;
}

int cmd_coeffs(const Config& cfg) {
  const Format f = format_of(cfg);
  const Params p(cfg.params);
  const int depth = p.integer("m", 4);
  const auto tri = CoeffTriangle::build(p.real("p"), p.real("b", 1.0), depth,
                                        cfg.printed_rule ? TriangleRule::row_m_plus_1 : TriangleRule::row_m);
  write_coeffs(std::cout, tri, f);
  return kOk;
}

int cmd_errata(const Config& cfg) {
  const Format f = format_of(cfg);
  write_errata(std::cout, errata_ledger(resolve_workers(cfg)), f);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomial-weighted series: evaluation, verification and tables"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--format", cfg.format, "text, csv or jsonl")->capture_default_str();
  app.add_option("--tol", cfg.tol, "replace every record tolerance");
  app.add_option("--workers", cfg.workers, "worker threads (overrides RSERIES_WORKERS)");
  for (const auto& name : kParamNames) {
    app.add_option_function<std::string>(
        "--" + name, [&cfg, name](const std::string& v) { cfg.params[name] = v; }, "parameter " + name);
  }

  auto* eval = app.add_subcommand("eval", "evaluate one quantity");
  eval->add_option("quantity", cfg.what, "phi, phitilde, psi, phida, zeta, lerch, sprime, integral")->required();
  eval->add_option("--form", cfg.form, "integral form F1..F12");
  eval->add_option("--k", cfg.k, "power of (1 + beta e^{-x}) in F12");
  eval->add_flag("--sine", cfg.sine, "F11: sine part");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.what, "all, series, shifts, trig, twosided, errata")->required();

  auto* table = app.add_subcommand("table", "tabulate a series over parameter ranges");
  table->add_option("series", cfg.what, "phi, phitilde, psi, phida, zeta, lerch, sprime")->required();

  auto* coeffs = app.add_subcommand("coeffs", "print the coefficient triangle A_k^(m)(p,b)");
  coeffs->add_flag("--printed-rule", cfg.printed_rule, "use the literal printed recurrence");

  app.add_subcommand("errata", "print the ledger of corrected formulas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*table) return cmd_table(cfg);
    if (*coeffs) return cmd_coeffs(cfg);
    return cmd_errata(cfg);
  } catch (const UsageError& e) {
    std::cerr << "rseries: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "rseries: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "rseries: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "rseries: " << e.what() << '\n';
    return kFail;
  }
}
