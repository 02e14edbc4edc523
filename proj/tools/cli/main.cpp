#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "koshliakov/arith.hpp"
#include "koshliakov/precision.hpp"
#include "koshliakov/specfun.hpp"

using namespace koshliakov;

namespace {

constexpr int exit_pass = 0, exit_fail = 2, exit_error = 3, exit_usage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cd complex_arg(const std::string& flag, const std::string& text) {
  auto v = cli::parse_complex(text);
  if (!v) throw UsageError("--" + flag + ": cannot parse '" + text + "' as a number (forms: 0.5, -1e-3, 0.5+0.25i)");
  return *v;
}

double real_arg(const std::string& flag, const std::string& text) {
  cd v = complex_arg(flag, text);
  if (v.imag() != 0) throw UsageError("--" + flag + " must be real");
  return v.real();
}

// Raw --key value strings, converted once we know what the command accepts.
struct ParamFlags {
  std::map<std::string, std::string> values;
  double tol = 0, abs_tol = 0, rel_tol = 0;
  bool fixed_terms = false;

  void attach(CLI::App* app, const std::vector<std::string>& keys) {
    for (const auto& k : keys) app->add_option("--" + k, values[k], "parameter " + k);
  }
  bool given(const std::string& k) const {
    auto it = values.find(k);
    return it != values.end() && !it->second.empty();
  }
};

const std::vector<std::string> identity_keys = {"z", "alpha", "terms", "x", "y", "q", "s", "nu", "pair"};

IdentityParams build_params(const IdentityInfo& info, const ParamFlags& f, bool sweeping) {
  for (const auto& k : identity_keys) {
    if (!f.given(k)) continue;
    bool ok = std::find(info.params.begin(), info.params.end(), k) != info.params.end();
    if (sweeping && k == "alpha") ok = false;
    if (!ok) throw UsageError(info.id + " does not take --" + k);
  }
  IdentityParams p;
  auto get = [&](const std::string& k) { return f.values.at(k); };
  if (f.given("z")) p.z = complex_arg("z", get("z"));
  if (f.given("alpha")) p.alpha = real_arg("alpha", get("alpha"));
  if (f.given("x")) p.x = real_arg("x", get("x"));
  if (f.given("y")) p.y = real_arg("y", get("y"));
  if (f.given("q")) p.q = real_arg("q", get("q"));
  if (f.given("s")) p.s = complex_arg("s", get("s"));
  if (f.given("nu")) p.nu = complex_arg("nu", get("nu"));
  if (f.given("pair")) p.pair = get("pair");
  if (f.given("terms")) {
    double t = real_arg("terms", get("terms"));
    if (t < 1 || t != std::floor(t) || t > 1e6) throw UsageError("--terms must be a positive integer");
    p.terms = int(t);
  }
  if (f.tol < 0 || f.abs_tol < 0 || f.rel_tol < 0) throw UsageError("tolerances must be positive");
  p.tolerance = f.tol;
  if (f.abs_tol > 0) p.spec.abs_tol = f.abs_tol;
  if (f.rel_tol > 0) p.spec.rel_tol = f.rel_tol;
  p.adaptive = !f.fixed_terms;
  return p;
}

const IdentityInfo& lookup(const std::string& id) {
  const IdentityInfo* info = find_identity(id);
  if (!info) throw UsageError("unknown identity '" + id + "' (see 'list')");
  return *info;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

int cmd_list() {
  for (const auto& i : identity_registry()) {
    std::string ps;
    for (const auto& p : i.params) ps += (ps.empty() ? "" : ",") + p;
    std::printf("%-22s %-20s tol=%-6s %s\n", i.id.c_str(), ps.c_str(), cli::format_double(i.default_tolerance, 3).c_str(),
                i.description.c_str());
  }
  return exit_pass;
}

int cmd_verify(const std::string& id, const ParamFlags& f, const PrecisionProfile& prof) {
  const auto& info = lookup(id);
  auto p = build_params(info, f, false);
  auto r = info.run(p);
  std::cout << cli::report_json(r, prof.name).dump(2) << "\n";
  return r.pass ? exit_pass : exit_fail;
}

struct SweepFlags {
  double alpha_min = 0.5, alpha_max = 2;
  int steps = 31;
  unsigned threads = 0;
  std::string csv, svg, json;
};

int cmd_sweep(const std::string& id, const ParamFlags& f, const SweepFlags& s, const PrecisionProfile& prof) {
  const auto& info = lookup(id);
  if (!info.alpha_sweepable) throw UsageError(id + " has no alpha parameter to sweep");
  cli::SweepConfig cfg;
  cfg.identity_id = id;
  cfg.base = build_params(info, f, true);
  cfg.alpha_min = s.alpha_min;
  cfg.alpha_max = s.alpha_max;
  cfg.alpha_steps = s.steps;
  cfg.threads = s.threads;
  auto rows = cli::run_sweep(cfg);

  std::string csv = cli::sweep_csv(rows);
  if (s.csv.empty()) std::cout << csv;
  else write_file(s.csv, csv);
  if (!s.svg.empty()) {
    std::string title = id + ", z = " + cli::format_complex_literal(cfg.base.z, 6);
    write_file(s.svg, cli::sweep_svg(rows, title));
  }
  if (!s.json.empty()) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      if (row.report) arr.push_back(cli::report_json(*row.report, prof.name));
      else arr.push_back({{"alpha", row.alpha}, {"error", row.error}});
    }
    write_file(s.json, arr.dump(2) + "\n");
  }
  bool any_error = false, any_fail = false;
  for (const auto& row : rows) {
    if (!row.report) {
      any_error = true;
      std::fprintf(stderr, "alpha=%s: %s\n", cli::format_double(row.alpha).c_str(), row.error.c_str());
    } else if (!row.report->pass) {
      any_fail = true;
    }
  }
  return any_error ? exit_error : any_fail ? exit_fail : exit_pass;
}

// --- eval ------------------------------------------------------------------

struct EvalFlags {
  std::map<std::string, std::string> values;
  std::string mode = "auto";
  std::string get(const std::string& k) const {
    auto it = values.find(k);
    if (it == values.end() || it->second.empty()) throw UsageError("missing --" + k);
    return it->second;
  }
};

const std::map<std::string, std::vector<std::string>> eval_signatures = {
    {"gamma", {"s"}},        {"zeta", {"s"}},          {"hurwitz", {"s", "a"}},   {"digamma", {"s"}},
    {"xi", {"s"}},           {"big-xi", {"t"}},        {"bessel-j", {"nu", "x"}}, {"bessel-y", {"nu", "x"}},
    {"bessel-k", {"nu", "x"}}, {"li", {"x"}},          {"kernel", {"z", "x"}},    {"omega", {"x", "z"}},
    {"lambda", {"x", "z"}},  {"sigma", {"a", "n"}}};

template <class Real>
std::complex<Real> eval_generic(const std::string& fn, const EvalFlags& e) {
  using C = std::complex<Real>;
  auto c = [&](const std::string& k) {
    cd v = complex_arg(k, e.get(k));
    return C(Real(v.real()), Real(v.imag()));
  };
  auto r = [&](const std::string& k) { return Real(real_arg(k, e.get(k))); };
  if (fn == "gamma") return gamma(c("s"));
  if (fn == "zeta") return riemann_zeta(c("s"));
  if (fn == "hurwitz") return hurwitz_zeta(c("s"), c("a"));
  if (fn == "digamma") return digamma(c("s"));
  if (fn == "xi") return xi(c("s"));
  if (fn == "big-xi") return big_xi(c("t"));
  if (fn == "bessel-j") return bessel_j(c("nu"), r("x"));
  if (fn == "bessel-y") return bessel_y(c("nu"), r("x"));
  if (fn == "bessel-k") return bessel_k(c("nu"), c("x"));
  if (fn == "li") return C(exp_integral_li(r("x")));
  if (fn == "sigma") {
    double n = real_arg("n", e.get("n"));
    if (n < 1 || n != std::floor(n)) throw UsageError("--n must be a positive integer");
    return sigma(c("a"), long(n));
  }
  throw UsageError("unknown function '" + fn + "'");
}

// Functions built on the double-only layer.
cd eval_double_only(const std::string& fn, const EvalFlags& e) {
  double x = real_arg("x", e.get("x"));
  cd z = complex_arg("z", e.get("z"));
  if (fn == "kernel") return koshliakov_kernel(z, x);
  if (fn == "lambda") return lambda_fn(x, z);
  OmegaMode mode = e.mode == "definition"          ? OmegaMode::definition
                   : e.mode == "partial-fraction" ? OmegaMode::partial_fraction
                   : e.mode == "auto"             ? OmegaMode::automatic
                                                  : throw UsageError("--mode must be definition, partial-fraction or auto");
  return omega(x, z, mode).value;
}

template <class Real>
void print_value(std::complex<Real> v, int digits) {
  char buf[128];
  if (v.imag() == 0) {
    std::snprintf(buf, sizeof buf, "%.*Lg\n", digits, static_cast<long double>(v.real()));
  } else {
    std::snprintf(buf, sizeof buf, "%.*Lg %.*Lg\n", digits, static_cast<long double>(v.real()), digits,
                  static_cast<long double>(v.imag()));
  }
  std::fputs(buf, stdout);
}

int cmd_eval(const std::string& fn, const EvalFlags& e, const PrecisionProfile& prof) {
  auto sig = eval_signatures.find(fn);
  if (sig == eval_signatures.end()) throw UsageError("unknown function '" + fn + "'");
  for (const auto& [k, v] : e.values) {
    if (v.empty()) continue;
    if (std::find(sig->second.begin(), sig->second.end(), k) == sig->second.end())
      throw UsageError(fn + " does not take --" + k);
  }
  if (fn == "kernel" || fn == "lambda" || fn == "omega") {
    print_value(eval_double_only(fn, e), std::min(prof.working_digits, 15));
  } else if (prof.name == "extended") {
    print_value(eval_generic<long double>(fn, e), prof.working_digits);
  } else {
    print_value(eval_generic<double>(fn, e), prof.working_digits);
  }
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks of Koshliakov-kernel identities and the special functions behind them"};
  app.require_subcommand(1);

  ParamFlags vflags, sflags;
  std::string verify_id, sweep_id, eval_fn;
  SweepFlags sweep;
  EvalFlags eflags;

  auto* list = app.add_subcommand("list", "List the registered identities");
  (void)list;

  auto* verify = app.add_subcommand("verify", "Verify one identity and print a JSON report");
  verify->add_option("identity", verify_id, "identity id")->required();
  vflags.attach(verify, identity_keys);
  verify->add_option("--tol", vflags.tol, "pass tolerance (default: per identity)");
  verify->add_option("--abs-tol", vflags.abs_tol, "quadrature absolute tolerance");
  verify->add_option("--rel-tol", vflags.rel_tol, "quadrature relative tolerance");
  verify->add_flag("--fixed-terms", vflags.fixed_terms, "use exactly --terms series terms, no tail correction");

  auto* sw = app.add_subcommand("sweep", "Sweep alpha and write CSV (and optionally SVG/JSON)");
  sw->add_option("identity", sweep_id, "identity id")->required();
  sflags.attach(sw, identity_keys);
  sw->add_option("--tol", sflags.tol, "pass tolerance (default: per identity)");
  sw->add_option("--abs-tol", sflags.abs_tol, "quadrature absolute tolerance");
  sw->add_option("--rel-tol", sflags.rel_tol, "quadrature relative tolerance");
  sw->add_flag("--fixed-terms", sflags.fixed_terms, "use exactly --terms series terms, no tail correction");
  sw->add_option("--alpha-min", sweep.alpha_min, "smallest alpha");
  sw->add_option("--alpha-max", sweep.alpha_max, "largest alpha");
  sw->add_option("--steps", sweep.steps, "number of alpha points (>= 2)");
  sw->add_option("--threads", sweep.threads, "worker threads (0: all cores)");
  sw->add_option("--csv", sweep.csv, "CSV output path (default: standard output)");
  sw->add_option("--svg", sweep.svg, "SVG chart output path");
  sw->add_option("--json", sweep.json, "JSON reports output path");

  auto* ev = app.add_subcommand("eval", "Evaluate a special function");
  ev->add_option("function", eval_fn, "one of: gamma zeta hurwitz digamma xi big-xi bessel-j bessel-y bessel-k "
                                      "li kernel omega lambda sigma")
      ->required();
  for (const char* k : {"s", "a", "t", "nu", "x", "z", "n"}) ev->add_option(std::string("--") + k, eflags.values[k]);
  ev->add_option("--mode", eflags.mode, "omega evaluation: definition, partial-fraction or auto");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    PrecisionProfile prof;
    try {
      prof = PrecisionProfile::from_environment();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (*list) return cmd_list();
    if (*verify) return cmd_verify(verify_id, vflags, prof);
    if (*sw) return cmd_sweep(sweep_id, sflags, sweep, prof);
    if (*ev) return cmd_eval(eval_fn, eflags, prof);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return exit_usage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_error;
  }
  return exit_usage;
}
