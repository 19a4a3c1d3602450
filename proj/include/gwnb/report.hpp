#pragma once

#include <gwnb/analysis.hpp>
#include <gwnb/simulate.hpp>
#include <gwnb/verify.hpp>

#include <json.hpp>

#include <cstdio>
#include <ostream>
#include <string>

namespace gwnb {

inline constexpr const char* kToolVersion = "0.1.0";

// shortest round-trip formatting for CSV cells
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

// every data file opens with the run configuration, one "# key=value" line
// per entry, so a file is self-describing and reruns are byte-comparable
inline void write_config_comments(std::ostream& os, const nlohmann::json& config) {
  os << "# tool=gwnb " << kToolVersion << "\n";
  for (const auto& [key, value] : config.items()) {
    os << "# " << key << "=";
    if (value.is_string())
      os << value.get<std::string>();
    else
      os << value.dump();
    os << "\n";
  }
}

inline nlohmann::json config_with_tool(nlohmann::json config) {
  config["tool"] = "gwnb";
  config["tool_version"] = kToolVersion;
  return config;
}

// ---- scan --------------------------------------------------------------------

inline void write_scan_csv(std::ostream& os, const GridReport<double>& rep, const nlohmann::json& config) {
  write_config_comments(os, config);
  os << "x,phi_nb,phi_fl,gap\n";
  for (const auto& row : rep.rows)
    os << fmt_double(row.x) << "," << fmt_double(row.nb) << "," << fmt_double(row.fl) << ","
       << fmt_double(row.gap) << "\n";
}

inline void write_scan_csv(std::ostream& os, const GridReport<BigRat>& rep, const nlohmann::json& config) {
  write_config_comments(os, config);
  os << "x,phi_nb,phi_fl,gap\n";
  for (const auto& row : rep.rows)
    os << row.x.str() << "," << row.nb.str() << "," << row.fl.str() << "," << row.gap.str() << "\n";
}

template <class S>
nlohmann::json scan_summary_json(const GridReport<S>& rep, const nlohmann::json& config) {
  nlohmann::json j;
  j["config"] = config_with_tool(config);
  j["grid_points"] = rep.grid_points;
  j["rows"] = rep.rows.size();
  j["violations"] = rep.violations;
  j["foreign_equalities"] = rep.foreign_equalities;
  nlohmann::json eq = nlohmann::json::array();
  for (const auto& x : rep.equality_xs) {
    if constexpr (std::is_same_v<S, BigRat>)
      eq.push_back(x.str());
    else
      eq.push_back(x);
  }
  j["equality_points"] = eq;
  if (rep.min_offwindow_gap) {
    if constexpr (std::is_same_v<S, BigRat>)
      j["min_offwindow_gap"] = rep.min_offwindow_gap->str();
    else
      j["min_offwindow_gap"] = *rep.min_offwindow_gap;
  } else {
    j["min_offwindow_gap"] = nullptr;
  }
  return j;
}

// ---- iterate -----------------------------------------------------------------

inline void write_iterate_csv(std::ostream& os, const SurvivalCurve& curve, const nlohmann::json& config) {
  write_config_comments(os, config);
  os << "n,fl_at_0,nb_at_0,limit\n";
  for (const auto& row : curve.rows)
    os << row.n << "," << fmt_double(row.fl_at_zero) << "," << fmt_double(row.nb_at_zero) << ","
       << fmt_double(curve.limit) << "\n";
}

inline nlohmann::json iterate_summary_json(const SurvivalCurve& curve, const nlohmann::json& config) {
  nlohmann::json j;
  j["config"] = config_with_tool(config);
  j["limit"] = curve.limit;
  j["generations"] = curve.rows.empty() ? 0 : curve.rows.back().n;
  j["final_fl_at_0"] = curve.rows.empty() ? 0.0 : curve.rows.back().fl_at_zero;
  j["final_nb_at_0"] = curve.rows.empty() ? 0.0 : curve.rows.back().nb_at_zero;
  return j;
}

// ---- simulate ----------------------------------------------------------------

inline void write_sim_csv(std::ostream& os, const SimReport& rep, const nlohmann::json& config) {
  write_config_comments(os, config);
  os << "generation,alive_fraction,cum_extinct_fraction\n";
  for (std::size_t n = 0; n < rep.alive_at.size(); ++n)
    os << n << "," << fmt_double(rep.alive_fraction(n)) << "," << fmt_double(rep.cum_extinct_fraction(n))
       << "\n";
}

inline nlohmann::json sim_summary_json(const SimReport& rep, const PgfProbe& probe, const nlohmann::json& config) {
  nlohmann::json j;
  j["config"] = config_with_tool(config);
  j["replicates"] = rep.config.replicates;
  j["seed"] = rep.config.seed;
  j["extinct"] = rep.extinct;
  j["survived"] = rep.survived;
  j["censored"] = rep.censored;
  j["extinct_fraction"] = rep.extinct_fraction();
  j["extinction_probability"] = p_inf(rep.config.params);
  nlohmann::json pj = nlohmann::json::array();
  for (std::size_t i = 0; i < probe.xs.size(); ++i) {
    nlohmann::json row;
    row["x"] = probe.xs[i];
    row["empirical"] = probe.empirical[i];
    row["expected"] = probe.expected[i];
    row["sigma"] = probe.sigma[i];
    pj.push_back(row);
  }
  j["pgf_probe"] = pj;
  return j;
}

inline void write_ledger_jsonl(const std::vector<IdentityReport>& reports, std::ostream& os) {
  for (const auto& rep : reports) {
    nlohmann::json line;
    line["id"] = rep.id;
    line["r"] = rep.r;
    line["range"] = rep.range;
    line["k"] = rep.k ? nlohmann::json(*rep.k) : nlohmann::json(nullptr);
    line["n"] = rep.n ? nlohmann::json(*rep.n) : nlohmann::json(nullptr);
    line["status"] = to_string(rep.status);
    if (rep.status == CheckStatus::fail) line["counterexample"] = rep.counterexample;
    os << line.dump() << "\n";
  }
}

}  // namespace gwnb
