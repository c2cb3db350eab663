#include "boxhunt/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace boxhunt {

using nlohmann::json;

const char* report_mode_name(ReportMode m) {
  return m == ReportMode::exact ? "exact" : "montecarlo";
}

std::string format_double(double v) {
  // shortest decimal that parses back to the same bits
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

namespace {

// CSV "mode" column: the engine plus, for the exact engine, its arithmetic.
std::string mode_field(const SpeedupReport& r) {
  if (r.mode == ReportMode::montecarlo) return "montecarlo";
  return r.numeric_mode == NumericMode::exact_rational ? "rational" : "float";
}

std::string opt_num(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

}  // namespace

std::string csv_header() {
  return "strategy,k,m,mode,theta,speedup_inv_theta,speedup_mean,stderr,"
         "trials,seed,bound,ratio";
}

std::string csv_row(const SpeedupReport& r) {
  std::ostringstream out;
  out << strategy_name(r.strategy) << ',' << r.k << ',' << r.m << ','
      << mode_field(r) << ',';
  out << (r.theta_exact ? *r.theta_exact : format_double(r.theta)) << ',';
  out << (r.speedup_inv_theta_exact ? *r.speedup_inv_theta_exact
                                    : format_double(r.speedup_inv_theta))
      << ',';
  if (r.speedup_mean_exact)
    out << *r.speedup_mean_exact;
  else if (r.speedup_mean)
    out << format_double(*r.speedup_mean);
  out << ',';
  out << opt_num(r.stderr_value) << ',';
  out << (r.trials ? std::to_string(*r.trials) : std::string()) << ',';
  out << (r.seed ? std::to_string(*r.seed) : std::string()) << ',';
  out << opt_num(r.bound) << ',';
  out << opt_num(r.ratio);
  return out.str();
}

namespace {

json report_to_json(const SpeedupReport& r) {
  json j;
  j["strategy"] = strategy_name(r.strategy);
  j["k"] = r.k;
  j["m"] = r.m;
  j["mode"] = report_mode_name(r.mode);
  j["numeric_mode"] =
      r.numeric_mode == NumericMode::exact_rational ? "rational" : "float";
  j["theta"] = r.theta;
  j["speedup_inv_theta"] = r.speedup_inv_theta;
  if (r.speedup_mean) j["speedup_mean"] = *r.speedup_mean;
  if (r.theta_exact) j["theta_exact"] = *r.theta_exact;
  if (r.speedup_inv_theta_exact)
    j["speedup_inv_theta_exact"] = *r.speedup_inv_theta_exact;
  if (r.speedup_mean_exact) j["speedup_mean_exact"] = *r.speedup_mean_exact;
  if (r.stderr_value) j["stderr"] = *r.stderr_value;
  if (r.trials) j["trials"] = *r.trials;
  if (r.seed) j["seed"] = *r.seed;
  if (r.not_found) j["not_found"] = *r.not_found;
  if (r.found_fraction) j["found_fraction"] = *r.found_fraction;
  if (r.incomplete) j["incomplete"] = true;
  if (r.bound) j["bound"] = *r.bound;
  if (r.ratio) j["ratio"] = *r.ratio;
  if (r.bound_kind) j["bound_kind"] = *r.bound_kind;
  if (r.per_x) {
    json arr = json::array();
    for (const auto& p : *r.per_x)
      arr.push_back({{"x", p.x},
                     {"expected_time", p.expected_time},
                     {"theta_x", p.theta_x}});
    j["per_x"] = std::move(arr);
  }
  return j;
}

SpeedupReport report_from_json(const json& j) {
  SpeedupReport r;
  auto s = parse_strategy(j.at("strategy").get<std::string>());
  if (!s) throw std::invalid_argument("unknown strategy in report JSON");
  r.strategy = *s;
  r.k = j.at("k").get<int>();
  r.m = j.at("m").get<std::int64_t>();
  r.mode = j.at("mode").get<std::string>() == "exact" ? ReportMode::exact
                                                      : ReportMode::montecarlo;
  r.numeric_mode = j.at("numeric_mode").get<std::string>() == "rational"
                       ? NumericMode::exact_rational
                       : NumericMode::float64;
  r.theta = j.at("theta").get<double>();
  r.speedup_inv_theta = j.at("speedup_inv_theta").get<double>();
  if (j.contains("speedup_mean")) r.speedup_mean = j["speedup_mean"].get<double>();
  if (j.contains("theta_exact")) r.theta_exact = j["theta_exact"].get<std::string>();
  if (j.contains("speedup_inv_theta_exact"))
    r.speedup_inv_theta_exact = j["speedup_inv_theta_exact"].get<std::string>();
  if (j.contains("speedup_mean_exact"))
    r.speedup_mean_exact = j["speedup_mean_exact"].get<std::string>();
  if (j.contains("stderr")) r.stderr_value = j["stderr"].get<double>();
  if (j.contains("trials")) r.trials = j["trials"].get<std::int64_t>();
  if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("not_found")) r.not_found = j["not_found"].get<std::int64_t>();
  if (j.contains("found_fraction"))
    r.found_fraction = j["found_fraction"].get<double>();
  if (j.contains("incomplete")) r.incomplete = j["incomplete"].get<bool>();
  if (j.contains("bound")) r.bound = j["bound"].get<double>();
  if (j.contains("ratio")) r.ratio = j["ratio"].get<double>();
  if (j.contains("bound_kind")) r.bound_kind = j["bound_kind"].get<std::string>();
  if (j.contains("per_x")) {
    std::vector<PerBoxStat> v;
    for (const auto& p : j["per_x"])
      v.push_back({p.at("x").get<std::int64_t>(),
                   p.at("expected_time").get<double>(),
                   p.at("theta_x").get<double>()});
    r.per_x = std::move(v);
  }
  return r;
}

}  // namespace

std::string to_json_string(const SpeedupReport& r) {
  return report_to_json(r).dump(2);
}

std::string reports_to_json_string(const std::vector<SpeedupReport>& rs) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r));
  return arr.dump(2);
}

SpeedupReport report_from_json_string(const std::string& text) {
  return report_from_json(json::parse(text));
}

}  // namespace boxhunt
