// boxhunt: exact analysis and stochastic simulation of box-search strategies.
//
// Subcommands:
//   bounds    reference speed-up bounds per k
//   exact     theta from the non-visit matrix (rational or float engine)
//   simulate  Monte Carlo theta estimate, optionally with crashed searchers
//   opt       continuous-limit integral: closed form vs quadrature
//   verify    self-check suites (columns, monotonicity, zoom, gamma, mc)
//
// Exit codes: 0 success, 1 usage/configuration error, 2 a check failed.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boxhunt/bounds.hpp"
#include "boxhunt/continuous.hpp"
#include "boxhunt/exact.hpp"
#include "boxhunt/grid.hpp"
#include "boxhunt/montecarlo.hpp"
#include "boxhunt/report.hpp"
#include "boxhunt/rng.hpp"

using namespace boxhunt;
using nlohmann::json;

namespace {

struct GlobalOpts {
  std::string format = "csv";  // csv | json
  std::string out;             // empty -> stdout
  std::string exec = "parallel";

  Exec exec_mode() const {
    return exec == "serial" ? Exec::serial : Exec::parallel;
  }
};

// "5" -> {5}; "2..6" -> {2,3,4,5,6}; "2..10:2" -> {2,4,6,8,10}
std::vector<std::int64_t> parse_range(const std::string& spec) {
  const auto bad = [&spec]() -> std::vector<std::int64_t> {
    throw CLI::ValidationError("range", "expected N or LO..HI[:STEP], got '" +
                                            spec + "'");
  };
  const auto to_int = [&](const std::string& s) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      bad();
    }
    if (pos != s.size()) bad();
    return v;
  };
  const auto dots = spec.find("..");
  if (dots == std::string::npos) return {to_int(spec)};
  std::string rest = spec.substr(dots + 2);
  std::int64_t step = 1;
  const auto colon = rest.find(':');
  if (colon != std::string::npos) {
    step = to_int(rest.substr(colon + 1));
    rest = rest.substr(0, colon);
  }
  const std::int64_t lo = to_int(spec.substr(0, dots));
  const std::int64_t hi = to_int(rest);
  if (step < 1 || hi < lo) bad();
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BOXHUNT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("BOXHUNT_SEED",
                                 "must be an unsigned integer");
    }
  }
  return 1;
}

// --out joined with $BOXHUNT_OUT when it is a bare filename.
std::string resolve_out_path(const std::string& out) {
  if (out.empty() || out.find('/') != std::string::npos) return out;
  if (const char* dir = std::getenv("BOXHUNT_OUT"))
    return std::string(dir) + "/" + out;
  return out;
}

int emit(const GlobalOpts& g, const std::string& text) {
  const std::string path = resolve_out_path(g.out);
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path);
  if (!f) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return 1;
  }
  f << text;
  return 0;
}

std::string render_reports(const GlobalOpts& g,
                           const std::vector<SpeedupReport>& reports) {
  if (g.format == "json") return reports_to_json_string(reports) + "\n";
  std::ostringstream os;
  os << csv_header() << "\n";
  for (const SpeedupReport& r : reports) os << csv_row(r) << "\n";
  for (const SpeedupReport& r : reports) {
    if (!r.per_x) continue;
    os << "\nstrategy,k,m,x,expected_time,theta_x\n";
    for (const PerBoxStat& p : *r.per_x)
      os << strategy_name(r.strategy) << "," << r.k << "," << r.m << ","
         << p.x << "," << format_double(p.expected_time) << ","
         << format_double(p.theta_x) << "\n";
  }
  return os.str();
}

StrategyId require_strategy(const std::string& name) {
  const auto s = parse_strategy(name);
  if (!s)
    throw CLI::ValidationError(
        "--alg", "unknown strategy '" + name +
                     "' (trivial, stoc, opt, memoryless, partition)");
  return *s;
}

std::vector<StrategyId> strategy_list(const std::string& name) {
  if (name == "all")
    return {StrategyId::Trivial, StrategyId::StocAdversarial,
            StrategyId::OptUniform, StrategyId::Memoryless,
            StrategyId::PartitionCoordinated};
  return {require_strategy(name)};
}

// ---------------------------------------------------------------- bounds --

int run_bounds(const GlobalOpts& g, const std::string& k_spec) {
  const auto ks = parse_range(k_spec);
  if (g.format == "json") {
    json arr = json::array();
    for (const std::int64_t k : ks) {
      const auto u = uniform_bound(static_cast<int>(k));
      const auto a = adversarial_bound(static_cast<int>(k));
      const auto ml = memoryless_bound(static_cast<int>(k));
      arr.push_back({{"k", k},
                     {"uniform_bound", u.value},
                     {"uniform_bound_fraction",
                      std::to_string(u.num) + "/" + std::to_string(u.den)},
                     {"adversarial_bound", a.value},
                     {"adversarial_bound_fraction",
                      std::to_string(a.num) + "/" + std::to_string(a.den)},
                     {"memoryless_lower_bound", ml.value},
                     {"gap_ratio", gap_ratio(static_cast<int>(k))}});
    }
    return emit(g, arr.dump(2) + "\n");
  }
  std::ostringstream os;
  os << "k,uniform_bound,adversarial_bound,memoryless_lower_bound,gap_ratio\n";
  for (const std::int64_t k : ks) {
    os << k << "," << format_double(uniform_bound(static_cast<int>(k)).value)
       << "," << format_double(adversarial_bound(static_cast<int>(k)).value)
       << "," << format_double(memoryless_bound(static_cast<int>(k)).value)
       << "," << format_double(gap_ratio(static_cast<int>(k))) << "\n";
  }
  return emit(g, os.str());
}

// ----------------------------------------------------------------- exact --

struct ExactArgs {
  std::string alg = "opt";
  std::string k_spec = "2";
  std::int64_t m = 100;
  std::string mode = "auto";  // rational | float | auto
  std::int64_t rational_limit = 512;
  std::int64_t treasure = 0;  // 0 -> uniform placement
  bool per_x = false;
  bool check_columns = false;
};

template <class T>
SpeedupReport exact_one(const ExactArgs& a, StrategyId s, int k, Exec exec,
                        bool* column_ok) {
  ProblemInstance inst{a.m, k,
                       a.treasure > 0 ? Placement::fixed(a.treasure)
                                      : Placement::uniform_boxes()};
  inst.m = effective_box_count(s, a.m, k);
  if (const auto err = validate_instance(inst))
    throw CLI::ValidationError("exact", *err);
  BuildOptions opts;
  opts.rational_m_limit = a.rational_limit;
  const auto M = build_matrix<T>(build_schedule(s, inst), opts);
  if (a.check_columns) {
    if (const auto viol = column_requirement_check(M)) {
      std::cerr << "column budget violated: strategy="
                << strategy_name(s) << " k=" << k << " t=" << viol->t
                << " sum=" << format_double(viol->column_sum) << " allowed="
                << format_double(viol->allowed) << "\n";
      *column_ok = false;
    }
  }
  ThetaOptions topts;
  topts.per_x = a.per_x;
  topts.exec = exec;
  SpeedupReport r = theta(M, k, inst.placement, topts);
  attach_bound(r);
  return r;
}

int run_exact(const GlobalOpts& g, const ExactArgs& a) {
  std::vector<SpeedupReport> reports;
  bool column_ok = true;
  for (const std::int64_t k64 : parse_range(a.k_spec)) {
    const int k = static_cast<int>(k64);
    for (const StrategyId s : strategy_list(a.alg)) {
      const bool rational =
          a.mode == "rational" ||
          (a.mode == "auto" &&
           effective_box_count(s, a.m, k) <= a.rational_limit);
      reports.push_back(rational ? exact_one<Rational>(a, s, k, g.exec_mode(),
                                                       &column_ok)
                                 : exact_one<double>(a, s, k, g.exec_mode(),
                                                     &column_ok));
    }
  }
  const int rc = emit(g, render_reports(g, reports));
  if (rc != 0) return rc;
  return column_ok ? 0 : 2;
}

// -------------------------------------------------------------- simulate --

struct SimulateArgs {
  std::string alg = "opt";
  std::string k_spec = "2";
  std::int64_t m = 100;
  std::int64_t trials = 100000;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> crash_specs;
  std::int64_t max_steps = 0;
  std::int64_t treasure = 0;
  bool per_x = false;
};

CrashEvent parse_crash(const std::string& spec, int k) {
  const auto at = spec.find('@');
  CrashEvent ev;
  try {
    if (at == std::string::npos) throw std::invalid_argument(spec);
    ev.searcher = std::stoi(spec.substr(0, at));
    ev.step = std::stoll(spec.substr(at + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError(
        "--crash", "expected SEARCHER@STEP (e.g. 0@0), got '" + spec + "'");
  }
  if (ev.searcher < 0 || ev.searcher >= k)
    throw CLI::ValidationError("--crash",
                               "searcher index must lie in 0..k-1");
  return ev;
}

int run_simulate(const GlobalOpts& g, const SimulateArgs& a) {
  std::vector<SpeedupReport> reports;
  for (const std::int64_t k64 : parse_range(a.k_spec)) {
    const int k = static_cast<int>(k64);
    const StrategyId s = require_strategy(a.alg);
    SimConfig cfg;
    cfg.strategy = s;
    cfg.instance = {effective_box_count(s, a.m, k), k,
                    a.treasure > 0 ? Placement::fixed(a.treasure)
                                   : Placement::uniform_boxes()};
    cfg.trials = a.trials;
    cfg.seed = a.seed ? *a.seed : default_seed();
    cfg.max_steps = a.max_steps;
    cfg.per_x = a.per_x;
    for (const std::string& spec : a.crash_specs)
      cfg.crashes.push_back(parse_crash(spec, k));
    if (const auto err = validate_config(cfg))
      throw CLI::ValidationError("simulate", *err);
    if (cfg.instance.m != a.m)
      std::cerr << "note: m rounded up to the strategy's phase multiple: "
                << cfg.instance.m << "\n";
    SpeedupReport r = estimate_theta(cfg, g.exec_mode());
    attach_bound(r);
    if (g.format == "csv" && r.found_fraction && *r.found_fraction < 1.0)
      std::cerr << "note: treasure found in "
                << format_double(*r.found_fraction * 100.0)
                << "% of trials; theta averages found trials only\n";
    reports.push_back(std::move(r));
  }
  return emit(g, render_reports(g, reports));
}

// ------------------------------------------------------------------- opt --

int run_opt(const GlobalOpts& g, const std::string& k_spec, double quad_tol) {
  bool ok = true;
  struct Row {
    std::int64_t k;
    ClosedFormTheta cf;
    QuadratureResult q;
  };
  std::vector<Row> rows;
  for (const std::int64_t k : parse_range(k_spec)) {
    const auto cf = theta_integral_closed_form(static_cast<int>(k));
    const auto q = theta_integral_quadrature(static_cast<int>(k), quad_tol,
                                             1e-6, g.exec_mode());
    if (std::abs(q.value - cf.total.to_double()) >
        q.error_estimate + 1e-8)
      ok = false;
    rows.push_back({k, cf, q});
  }
  std::string text;
  if (g.format == "json") {
    json arr = json::array();
    for (const Row& r : rows) {
      arr.push_back(
          {{"k", r.k},
           {"region_partial", r.cf.region_partial.to_double()},
           {"region_clipped", r.cf.region_clipped.to_double()},
           {"region_late", r.cf.region_late.to_double()},
           {"pieces_sum", r.cf.region_partial.to_double() +
                              r.cf.region_clipped.to_double() +
                              r.cf.region_late.to_double()},
           {"closed_form", r.cf.total.to_double()},
           {"closed_form_fraction", std::to_string(r.cf.total.num) + "/" +
                                        std::to_string(r.cf.total.den)},
           {"quadrature", r.q.value},
           {"quadrature_error", r.q.error_estimate}});
    }
    text = arr.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "k,region_partial,region_clipped,region_late,pieces_sum,"
          "closed_form,quadrature,quadrature_error\n";
    for (const Row& r : rows) {
      const double sum = r.cf.region_partial.to_double() +
                         r.cf.region_clipped.to_double() +
                         r.cf.region_late.to_double();
      os << r.k << "," << format_double(r.cf.region_partial.to_double())
         << "," << format_double(r.cf.region_clipped.to_double()) << ","
         << format_double(r.cf.region_late.to_double()) << ","
         << format_double(sum) << ","
         << format_double(r.cf.total.to_double()) << ","
         << format_double(r.q.value) << ","
         << format_double(r.q.error_estimate) << "\n";
    }
    text = os.str();
  }
  const int rc = emit(g, text);
  if (rc != 0) return rc;
  if (!ok) {
    std::cerr << "error: quadrature does not match the closed form within "
                 "its error estimate\n";
    return 2;
  }
  return 0;
}

// ---------------------------------------------------------------- verify --

struct VerifyArgs {
  std::string suite = "all";
  std::int64_t cases = 200;
  std::optional<std::uint64_t> seed;
  std::string alg = "all";
  std::string k_spec = "2..3";
  std::int64_t m = 60;
};

struct VerifyLog {
  std::ostringstream os;
  int failures = 0;

  void check(const std::string& name, bool pass, const std::string& detail) {
    os << (pass ? "PASS  " : "FAIL  ") << name;
    if (!detail.empty()) os << "  (" << detail << ")";
    os << "\n";
    if (!pass) ++failures;
  }
};

void verify_columns(const VerifyArgs& a, VerifyLog& log) {
  for (const std::int64_t k64 : parse_range(a.k_spec))
    for (const StrategyId s : strategy_list(a.alg)) {
      const int k = static_cast<int>(k64);
      ProblemInstance inst{effective_box_count(s, a.m, k), k,
                           Placement::uniform_boxes()};
      const auto M = build_matrix<double>(build_schedule(s, inst));
      const auto viol = column_requirement_check(M);
      std::string detail;
      if (viol)
        detail = "t=" + std::to_string(viol->t) +
                 " sum=" + format_double(viol->column_sum) +
                 " allowed=" + format_double(viol->allowed);
      log.check(std::string("columns ") + strategy_name(s) +
                    " k=" + std::to_string(k),
                !viol, detail);
    }
}

void verify_monotonicity(const VerifyArgs& a, VerifyLog& log) {
  for (const std::int64_t k64 : parse_range(a.k_spec))
    for (const StrategyId s : strategy_list(a.alg)) {
      const int k = static_cast<int>(k64);
      ProblemInstance inst{effective_box_count(s, a.m, k), k,
                           Placement::uniform_boxes()};
      const auto M = build_matrix<double>(build_schedule(s, inst));
      bool ok = true;
      std::string detail;
      for (std::int64_t x = 1; x <= M.m && ok; ++x) {
        double prev = 1.0;
        for (std::int64_t t = 0; t <= M.horizon + 2 && ok; ++t) {
          const double v = M.entry(x, t);
          if (v > prev + 1e-15) {
            ok = false;
            detail = "x=" + std::to_string(x) + " t=" + std::to_string(t) +
                     " rises";
          }
          prev = v;
        }
      }
      for (std::int64_t t = 0; t <= M.horizon && ok; ++t)
        for (std::int64_t x = 2; x <= M.m && ok; ++x)
          if (M.entry(x, t) + 1e-15 < M.entry(x - 1, t)) {
            ok = false;
            detail = "x=" + std::to_string(x) + " t=" + std::to_string(t) +
                     " below previous box";
          }
      log.check(std::string("monotonicity ") + strategy_name(s) +
                    " k=" + std::to_string(k),
                ok, detail);
    }
}

void verify_zoom(const VerifyArgs& a, VerifyLog& log) {
  for (const std::int64_t k64 : parse_range(a.k_spec)) {
    const int k = static_cast<int>(k64);
    if (k < 2) continue;
    OptGridOptions go;
    go.nx_log = go.nx_lin = 384;
    go.nt = 768;
    const GridFunction f = sample_opt_grid(k, go);
    const double th = theta_of_grid(f, k);
    const double a1 = 3.0, b1 = 2.0;
    const GridFunction z = zoom(f, a1, b1);
    const double thz = theta_of_grid(z, k);
    const double want = th * b1 / a1;
    const bool ok_theta = std::abs(thz - want) <= 1e-3 * want;
    log.check("zoom theta k=" + std::to_string(k), ok_theta,
              format_double(thz) + " vs " + format_double(want));
    const double t0 = 0.2;
    const double c = column_integral(f, t0);
    const double cz = column_integral(z, t0 * b1);
    const bool ok_col = std::abs(cz - a1 * c) <= 1e-3 * std::max(1.0, a1 * c);
    log.check("zoom column k=" + std::to_string(k), ok_col,
              format_double(cz) + " vs " + format_double(a1 * c));
  }
}

void verify_gamma(const VerifyArgs& a, VerifyLog& log) {
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  Xoshiro256ss rng = substream(seed, 0, 0);
  std::int64_t bad = 0;
  for (std::int64_t i = 0; i < a.cases; ++i) {
    const std::uint64_t b = 1 + rng.below(1000000);
    const std::uint64_t at = 1 + rng.below(b);
    const double phi =
        static_cast<double>(rng.below(1u << 20)) / static_cast<double>(1u << 20);
    const auto gc = gamma_product_check(static_cast<std::int64_t>(at),
                                        static_cast<std::int64_t>(b), phi);
    if (!gc.holds) ++bad;
  }
  log.check("gamma product inequality (" + std::to_string(a.cases) + " cases)",
            bad == 0, bad ? std::to_string(bad) + " violations" : "");
}

void verify_mc(const VerifyArgs& a, VerifyLog& log) {
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  for (const std::int64_t k64 : parse_range(a.k_spec))
    for (const StrategyId s : strategy_list(a.alg)) {
      const int k = static_cast<int>(k64);
      ProblemInstance inst{effective_box_count(s, a.m, k), k,
                           Placement::uniform_boxes()};
      const auto M = build_matrix<double>(build_schedule(s, inst));
      const double exact = theta(M, k, inst.placement).theta;
      SimConfig cfg;
      cfg.strategy = s;
      cfg.instance = inst;
      cfg.trials = 40000;
      cfg.seed = seed;
      const SpeedupReport r = estimate_theta(cfg);
      const double dev = std::abs(r.theta - exact);
      const double lim = 4.0 * (r.stderr_value ? *r.stderr_value : 0.0);
      log.check(std::string("mc-vs-exact ") + strategy_name(s) +
                    " k=" + std::to_string(k),
                dev <= lim,
                "dev=" + format_double(dev) + " 4se=" + format_double(lim));
    }
}

int run_verify(const GlobalOpts& g, const VerifyArgs& a) {
  VerifyLog log;
  const bool all = a.suite == "all";
  if (all || a.suite == "columns") verify_columns(a, log);
  if (all || a.suite == "monotonicity") verify_monotonicity(a, log);
  if (all || a.suite == "zoom") verify_zoom(a, log);
  if (all || a.suite == "gamma") verify_gamma(a, log);
  if (all || a.suite == "mc") verify_mc(a, log);
  log.os << (log.failures ? "FAILURES: " + std::to_string(log.failures)
                          : std::string("all checks passed"))
         << "\n";
  const int rc = emit(g, log.os.str());
  if (rc != 0) return rc;
  return log.failures ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "boxhunt: speed-up analysis of box-search strategies without "
      "coordination"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out,
                 "Write output to this file (joined with $BOXHUNT_OUT when "
                 "it is a bare name)");
  app.add_option("--exec", g.exec, "Kernel driver")
      ->check(CLI::IsMember({"serial", "parallel"}))
      ->capture_default_str();
  // Let the global options above also be written after a subcommand name.
  app.fallthrough();

  // bounds
  auto* cb = app.add_subcommand("bounds", "Reference speed-up bounds per k");
  std::string bounds_k = "2..10";
  cb->add_option("--k", bounds_k, "Searcher counts, N or LO..HI[:STEP]")
      ->capture_default_str();

  // exact
  auto* ce = app.add_subcommand(
      "exact", "Exact theta from the non-visit matrix");
  ExactArgs ea;
  ce->add_option("--alg", ea.alg, "Strategy (or 'all')")
      ->capture_default_str();
  ce->add_option("--k", ea.k_spec, "Searcher counts, N or LO..HI[:STEP]")
      ->capture_default_str();
  ce->add_option("--m", ea.m, "Number of boxes")->capture_default_str();
  ce->add_option("--mode", ea.mode, "Numeric engine")
      ->check(CLI::IsMember({"rational", "float", "auto"}))
      ->capture_default_str();
  ce->add_option("--rational-limit", ea.rational_limit,
                 "Largest m the rational engine accepts")
      ->capture_default_str();
  ce->add_option("--treasure", ea.treasure,
                 "Fixed treasure position (default: uniform placement)");
  ce->add_flag("--per-x", ea.per_x, "Emit per-box expected times");
  ce->add_flag("--check-columns", ea.check_columns,
               "Verify per-step column budgets (exit 2 on violation)");

  // simulate
  auto* cs = app.add_subcommand("simulate", "Monte Carlo theta estimate");
  SimulateArgs sa;
  cs->add_option("--alg", sa.alg, "Strategy")->capture_default_str();
  cs->add_option("--k", sa.k_spec, "Searcher counts, N or LO..HI[:STEP]")
      ->capture_default_str();
  cs->add_option("--m", sa.m, "Number of boxes")->capture_default_str();
  cs->add_option("--trials", sa.trials, "Trials")->capture_default_str();
  cs->add_option("--seed", sa.seed,
                 "RNG seed (default: $BOXHUNT_SEED, else 1)");
  cs->add_option("--crash", sa.crash_specs,
                 "Crash plan SEARCHER@STEP (repeatable; @0 = never opens)");
  cs->add_option("--max-steps", sa.max_steps,
                 "Step cap per trial (0 = 64*k*m)");
  cs->add_option("--treasure", sa.treasure,
                 "Fixed treasure position (default: uniform placement)");
  cs->add_flag("--per-x", sa.per_x,
               "Bucketed per-box mean find times (needs trials >= 100*m)");

  // opt
  auto* co = app.add_subcommand(
      "opt", "Continuous-limit theta: closed form vs quadrature");
  std::string opt_k = "2..6";
  double quad_tol = 1e-9;
  co->add_option("--k", opt_k, "Searcher counts, N or LO..HI[:STEP]")
      ->capture_default_str();
  co->add_option("--quad-tol", quad_tol, "Quadrature tolerance")
      ->capture_default_str();

  // verify
  auto* cv = app.add_subcommand("verify", "Self-check suites");
  VerifyArgs va;
  cv->add_option("--suite", va.suite, "Suite to run")
      ->check(CLI::IsMember(
          {"columns", "monotonicity", "zoom", "gamma", "mc", "all"}))
      ->capture_default_str();
  cv->add_option("--cases", va.cases, "Random cases for the gamma suite")
      ->capture_default_str();
  cv->add_option("--seed", va.seed,
                 "RNG seed (default: $BOXHUNT_SEED, else 1)");
  cv->add_option("--alg", va.alg, "Strategy (or 'all')")
      ->capture_default_str();
  cv->add_option("--k", va.k_spec, "Searcher counts")->capture_default_str();
  cv->add_option("--m", va.m, "Number of boxes")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cb->parsed()) return run_bounds(g, bounds_k);
    if (ce->parsed()) return run_exact(g, ea);
    if (cs->parsed()) return run_simulate(g, sa);
    if (co->parsed()) return run_opt(g, opt_k, quad_tol);
    if (cv->parsed()) return run_verify(g, va);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
