#include <CLI11.hpp>
#include <json.hpp>

#include <gwnb/gwnb.hpp>
#include <gwnb/report.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

namespace {

std::string out_dir() {
  const char* v = std::getenv("GWNB_OUT_DIR");
  return (v && *v) ? std::string(v) : std::string(".");
}

std::string join_path(const std::string& dir, const std::string& name) {
  if (dir.empty() || dir == ".") return name;
  return dir.back() == '/' ? dir + name : dir + "/" + name;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot open output file '" + path + "'");
  return os;
}

// zeta arrives as text: "p/q" enables exact mode, a decimal forces float
struct ZetaInput {
  std::string text;
  bool is_fraction = false;
  double value = 0.0;
  gwnb::BigRat rational;
};

ZetaInput parse_zeta(const std::string& text) {
  ZetaInput z;
  z.text = text;
  if (gwnb::is_fraction_literal(text)) {
    z.is_fraction = true;
    z.rational = gwnb::parse_rational(text);
    z.value = gwnb::to_double(z.rational);
  } else {
    std::size_t used = 0;
    z.value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("zeta: trailing characters in '" + text + "'");
    // an integer literal like "1" is also a valid rational; keep it exactable
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
        text.find('E') == std::string::npos) {
      z.is_fraction = true;
      z.rational = gwnb::parse_rational(text);
    }
  }
  return z;
}

bool resolve_exact(const std::string& mode, const ZetaInput& z) {
  if (mode == "exact") {
    if (!z.is_fraction)
      throw std::invalid_argument("exact mode requires zeta as a fraction string \"p/q\", got '" + z.text + "'");
    return true;
  }
  if (mode == "float") return false;
  return z.is_fraction;  // auto
}

void maybe_stamp(nlohmann::json& config, bool timestamp) {
  if (!timestamp) return;
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  config["timestamp"] = buf;
}

// ---- subcommands ---------------------------------------------------------

int run_verify(int r_max, const std::string& out_path, bool timestamp) {
  const auto reports = gwnb::verify_all(r_max);
  nlohmann::json config = gwnb::config_with_tool({{"subcommand", "verify"}, {"r_max", r_max}, {"out", out_path}});
  maybe_stamp(config, timestamp);
  {
    auto os = open_out(out_path);
    os << nlohmann::json{{"id", "run_config"}, {"config", config}}.dump() << "\n";
    gwnb::write_ledger_jsonl(reports, os);
  }
  std::size_t pass = 0, fail = 0, vacuous = 0;
  const gwnb::IdentityReport* first_fail = nullptr;
  for (const auto& rep : reports) {
    switch (rep.status) {
      case gwnb::CheckStatus::pass: ++pass; break;
      case gwnb::CheckStatus::vacuous: ++vacuous; break;
      case gwnb::CheckStatus::fail:
        ++fail;
        if (!first_fail) first_fail = &rep;
        break;
    }
  }
  std::cout << "verify: r in [2," << r_max << "], " << reports.size() << " checks: " << pass << " pass, "
            << fail << " fail, " << vacuous << " vacuous\n"
            << "ledger: " << out_path << "\n";
  if (first_fail) {
    std::cout << "FIRST FAILURE: " << first_fail->id << " r=" << first_fail->r;
    if (first_fail->k) std::cout << " k=" << *first_fail->k;
    if (first_fail->n) std::cout << " n=" << *first_fail->n;
    std::cout << "\n  " << first_fail->counterexample << "\n";
    return 1;
  }
  return 0;
}

int run_scan(int r, const ZetaInput& z, std::size_t grid, const std::string& mode, const std::string& csv_path,
             const std::string& json_path, bool timestamp) {
  const bool exact = resolve_exact(mode, z);
  nlohmann::json config = gwnb::config_with_tool({{"subcommand", "scan"},
                                                  {"r", r},
                                                  {"zeta", z.text},
                                                  {"grid", grid},
                                                  {"mode", exact ? "exact" : "float"},
                                                  {"out", csv_path},
                                                  {"summary", json_path}});
  maybe_stamp(config, timestamp);
  std::size_t violations = 0, foreign = 0;
  nlohmann::json summary;
  if (exact) {
    const auto rep = gwnb::scan_inequality_exact(gwnb::make_params(r, z.rational), grid);
    auto os = open_out(csv_path);
    gwnb::write_scan_csv(os, rep, config);
    summary = gwnb::scan_summary_json(rep, config);
    violations = rep.violations;
    foreign = rep.foreign_equalities;
    std::cout << "scan (exact): r=" << r << " zeta=" << z.text << " points=" << rep.rows.size() << "\n";
    for (const auto& x : rep.equality_xs) std::cout << "  equality at x = " << x.str() << "\n";
  } else {
    const auto rep = gwnb::scan_inequality(gwnb::make_params(r, z.value), grid);
    auto os = open_out(csv_path);
    gwnb::write_scan_csv(os, rep, config);
    summary = gwnb::scan_summary_json(rep, config);
    violations = rep.violations;
    foreign = rep.foreign_equalities;
    std::cout << "scan (float): r=" << r << " zeta=" << z.text << " points=" << rep.rows.size() << "\n";
    for (const auto& x : rep.equality_xs) std::cout << "  equality at x = " << gwnb::fmt_double(x) << "\n";
  }
  open_out(json_path) << summary.dump(2) << "\n";
  std::cout << "violations=" << violations << " foreign_equalities=" << foreign << "\n"
            << "csv: " << csv_path << "\nsummary: " << json_path << "\n";
  return (violations > 0 || foreign > 0) ? 1 : 0;
}

int run_extinct(int r, const ZetaInput& z, const std::string& json_path, bool timestamp) {
  const auto p = gwnb::make_params(r, z.value);
  const auto res = gwnb::extinction_probability(p);
  const double closed = gwnb::p_inf(p);
  const double bisect = gwnb::extinction_probability_bisect(p);
  nlohmann::json config = gwnb::config_with_tool(
      {{"subcommand", "extinct"}, {"r", r}, {"zeta", z.text}, {"summary", json_path}});
  maybe_stamp(config, timestamp);
  nlohmann::json summary{{"config", config},
                         {"extinction_probability", res.value},
                         {"closed_form", closed},
                         {"bisection", bisect},
                         {"iterations", res.iterations},
                         {"supercritical", res.supercritical}};
  if (z.is_fraction) summary["closed_form_exact"] = gwnb::pow_int(z.rational, r).str();
  open_out(json_path) << summary.dump(2) << "\n";
  std::printf("extinction probability = %.12f\n", res.value);
  std::printf("closed form zeta^r     = %.12f\n", closed);
  std::printf("bisection cross-check  = %.12f\n", bisect);
  std::printf("iterations = %llu, supercritical = %s\n", static_cast<unsigned long long>(res.iterations),
              res.supercritical ? "true" : "false");
  std::cout << "summary: " << json_path << "\n";
  // agreement of the two independent solvers is part of the contract
  return (std::abs(res.value - closed) < 1e-9 && std::abs(bisect - closed) < 1e-9) ? 0 : 1;
}

int run_iterate(int r, const ZetaInput& z, std::uint64_t n, const std::string& csv_path,
                const std::string& json_path, bool timestamp) {
  const auto p = gwnb::make_params(r, z.value);
  const auto curve = gwnb::survival_bounds(p, n);
  nlohmann::json config = gwnb::config_with_tool({{"subcommand", "iterate"},
                                                  {"r", r},
                                                  {"zeta", z.text},
                                                  {"n", n},
                                                  {"out", csv_path},
                                                  {"summary", json_path}});
  maybe_stamp(config, timestamp);
  {
    auto os = open_out(csv_path);
    gwnb::write_iterate_csv(os, curve, config);
  }
  nlohmann::json summary = gwnb::iterate_summary_json(curve, config);

  // matrix power against plain composition, exact when the input allows it
  bool consistent = true;
  const double mat = gwnb::iterate_fl(p, n, 0.0);
  const double seq = gwnb::iterate_fl_sequential(p, n, 0.0);
  consistent = std::abs(mat - seq) <= 1e-12;
  summary["matrix_vs_sequential_abs_diff"] = std::abs(mat - seq);
  if (z.is_fraction) {
    const auto pq = gwnb::make_params(r, z.rational);
    const bool exact_equal =
        gwnb::iterate_fl(pq, n, gwnb::BigRat(0)) == gwnb::iterate_fl_sequential(pq, n, gwnb::BigRat(0));
    summary["matrix_vs_sequential_exact_equal"] = exact_equal;
    consistent = consistent && exact_equal;
  }

  // monotone approach to the limit with FL never above NB
  bool ordered = true;
  for (std::size_t i = 1; i < curve.rows.size() && ordered; ++i) {
    const auto& row = curve.rows[i];
    const auto& last = curve.rows[i - 1];
    ordered = row.fl_at_zero >= last.fl_at_zero - 1e-15 && row.nb_at_zero >= last.nb_at_zero - 1e-15 &&
              row.fl_at_zero <= row.nb_at_zero + 1e-13 && row.nb_at_zero <= curve.limit + 1e-12;
  }
  summary["monotone_ordered"] = ordered;
  open_out(json_path) << summary.dump(2) << "\n";

  std::printf("iterate: r=%d zeta=%s n=%llu\n", r, z.text.c_str(), static_cast<unsigned long long>(n));
  std::printf("phi_FL^(n)(0) = %.15g\nphi_NB^(n)(0) = %.15g\nlimit zeta^r  = %.15g\n",
              curve.rows.back().fl_at_zero, curve.rows.back().nb_at_zero, curve.limit);
  std::printf("matrix vs sequential |diff| = %.3g%s\n", std::abs(mat - seq),
              z.is_fraction ? " (exact check included)" : "");
  std::cout << "csv: " << csv_path << "\nsummary: " << json_path << "\n";
  return (consistent && ordered) ? 0 : 1;
}

int run_simulate(int r, const ZetaInput& z, std::uint64_t reps, std::uint64_t gens, std::uint64_t cap,
                 std::uint64_t seed, std::uint64_t probe_draws, const std::string& csv_path,
                 const std::string& json_path, bool timestamp) {
  gwnb::SimConfig cfg;
  cfg.params = gwnb::make_params(r, z.value);
  cfg.replicates = reps;
  cfg.max_generations = gens;
  cfg.population_cap = cap;
  cfg.seed = seed;
  const auto rep = gwnb::run_simulation(cfg);
  const auto probe = gwnb::probe_offspring_pgf(cfg.params, probe_draws, seed ^ 0x50524f4245ull);
  nlohmann::json config = gwnb::config_with_tool({{"subcommand", "simulate"},
                                                  {"r", r},
                                                  {"zeta", z.text},
                                                  {"reps", reps},
                                                  {"generations", gens},
                                                  {"cap", cap},
                                                  {"seed", seed},
                                                  {"probe_draws", probe_draws},
                                                  {"out", csv_path},
                                                  {"summary", json_path}});
  maybe_stamp(config, timestamp);
  {
    auto os = open_out(csv_path);
    gwnb::write_sim_csv(os, rep, config);
  }
  open_out(json_path) << gwnb::sim_summary_json(rep, probe, config).dump(2) << "\n";

  const double q = gwnb::p_inf(cfg.params);
  const double sigma = std::sqrt(q * (1.0 - q) / static_cast<double>(reps));
  const double zscore = (rep.extinct_fraction() - q) / sigma;
  std::printf("simulate: r=%d zeta=%s reps=%llu gens=%llu cap=%llu seed=%llu\n", r, z.text.c_str(),
              static_cast<unsigned long long>(reps), static_cast<unsigned long long>(gens),
              static_cast<unsigned long long>(cap), static_cast<unsigned long long>(seed));
  std::printf("extinct=%llu survived=%llu censored=%llu\n", static_cast<unsigned long long>(rep.extinct),
              static_cast<unsigned long long>(rep.survived), static_cast<unsigned long long>(rep.censored));
  std::printf("extinct fraction = %.6f, zeta^r = %.6f, z-score = %+.3f\n", rep.extinct_fraction(), q, zscore);
  std::cout << "csv: " << csv_path << "\nsummary: " << json_path << "\n";
  // a 3-sigma excursion is suspicious but not an error by itself; 5 sigma is
  if (std::abs(zscore) > 3.0)
    std::printf("note: extinction frequency is outside 3 sigma (z = %+.3f)\n", zscore);
  return std::abs(zscore) <= 5.0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negative binomial branching: fractional linear bound, verification and simulation"};
  app.require_subcommand(1);
  bool timestamp = false;
  app.add_flag("--timestamp", timestamp, "stamp output configs with wall-clock time (breaks byte-identical reruns)");

  const std::string dir = out_dir();

  auto* verify = app.add_subcommand("verify", "machine-check every coefficient identity");
  int r_max = 25;
  std::string verify_out = join_path(dir, "verify_ledger.jsonl");
  verify->add_option("--r-max", r_max, "largest shape parameter to verify (>= 2)");
  verify->add_option("--out", verify_out, "ledger output path (JSONL)");

  auto* scan = app.add_subcommand("scan", "scan the lower-bound inequality over an x-grid");
  int scan_r = 2;
  std::string scan_zeta = "1/2";
  std::size_t scan_grid = 10'000;
  std::string scan_mode = "auto";
  std::string scan_out = join_path(dir, "scan.csv");
  std::string scan_json = join_path(dir, "scan_summary.json");
  scan->add_option("--r", scan_r, "shape parameter (>= 2)")->required();
  scan->add_option("--zeta", scan_zeta, "zeta in (0,1); \"p/q\" enables exact mode")->required();
  scan->add_option("--grid", scan_grid, "number of grid points");
  scan->add_option("--mode", scan_mode, "float | exact | auto")
      ->check(CLI::IsMember({"float", "exact", "auto"}));
  scan->add_option("--out", scan_out, "CSV output path");
  scan->add_option("--json", scan_json, "summary JSON output path");

  auto* extinct = app.add_subcommand("extinct", "solve for the extinction probability");
  int ext_r = 2;
  std::string ext_zeta = "1/2";
  std::string ext_json = join_path(dir, "extinct_summary.json");
  extinct->add_option("--r", ext_r, "shape parameter (>= 2)")->required();
  extinct->add_option("--zeta", ext_zeta, "zeta in (0,1)")->required();
  extinct->add_option("--json", ext_json, "summary JSON output path");

  auto* iterate = app.add_subcommand("iterate", "iterate both pgfs at 0 and check the matrix power");
  int it_r = 2;
  std::string it_zeta = "1/2";
  std::uint64_t it_n = 50;
  std::string it_out = join_path(dir, "iterate.csv");
  std::string it_json = join_path(dir, "iterate_summary.json");
  iterate->add_option("--r", it_r, "shape parameter (>= 2)")->required();
  iterate->add_option("--zeta", it_zeta, "zeta in (0,1)")->required();
  iterate->add_option("--n", it_n, "number of generations");
  iterate->add_option("--out", it_out, "CSV output path");
  iterate->add_option("--json", it_json, "summary JSON output path");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo the branching process");
  int sim_r = 2;
  std::string sim_zeta = "0.5";
  std::uint64_t sim_reps = 100'000;
  std::uint64_t sim_gens = 200;
  std::uint64_t sim_cap = 1'000'000;
  std::uint64_t sim_seed = 42;
  std::uint64_t sim_probe = 100'000;
  std::string sim_out = join_path(dir, "simulate.csv");
  std::string sim_json = join_path(dir, "simulate_summary.json");
  simulate->add_option("--r", sim_r, "shape parameter (>= 2)")->required();
  simulate->add_option("--zeta", sim_zeta, "zeta in (0,1)")->required();
  simulate->add_option("--reps", sim_reps, "number of replicates");
  simulate->add_option("--gens", sim_gens, "generation horizon");
  simulate->add_option("--cap", sim_cap, "population cap counted as survival");
  simulate->add_option("--seed", sim_seed, "RNG seed");
  simulate->add_option("--probe-draws", sim_probe, "draws for the offspring-pgf probe");
  simulate->add_option("--out", sim_out, "CSV output path");
  simulate->add_option("--json", sim_json, "summary JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0; every parse failure is a usage error
  }

  try {
    if (*verify) return run_verify(r_max, verify_out, timestamp);
    if (*scan) return run_scan(scan_r, parse_zeta(scan_zeta), scan_grid, scan_mode, scan_out, scan_json, timestamp);
    if (*extinct) return run_extinct(ext_r, parse_zeta(ext_zeta), ext_json, timestamp);
    if (*iterate) return run_iterate(it_r, parse_zeta(it_zeta), it_n, it_out, it_json, timestamp);
    if (*simulate)
      return run_simulate(sim_r, parse_zeta(sim_zeta), sim_reps, sim_gens, sim_cap, sim_seed, sim_probe,
                          sim_out, sim_json, timestamp);
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
