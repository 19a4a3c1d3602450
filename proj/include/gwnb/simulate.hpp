#pragma once

#include <gwnb/params.hpp>
#include <gwnb/pgf.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace gwnb {

struct SimConfig {
  ParamsD params{2, 0.5};
  std::uint64_t replicates = 100'000;
  std::uint64_t max_generations = 200;
  std::uint64_t population_cap = 1'000'000;  // reaching it counts as survival
  std::uint64_t seed = 42;
};

struct SimReport {
  SimConfig config;
  std::uint64_t extinct = 0;
  std::uint64_t survived = 0;  // hit the population cap
  std::uint64_t censored = 0;  // still alive but under the cap at the horizon
  // index n: state after n generations, n = 0 .. max_generations
  std::vector<std::uint64_t> alive_at;
  std::vector<std::uint64_t> extinct_by;

  double extinct_fraction() const { return static_cast<double>(extinct) / static_cast<double>(config.replicates); }
  double alive_fraction(std::size_t n) const {
    return static_cast<double>(alive_at[n]) / static_cast<double>(config.replicates);
  }
  double cum_extinct_fraction(std::size_t n) const {
    return static_cast<double>(extinct_by[n]) / static_cast<double>(config.replicates);
  }
};

namespace detail {

// splitmix64 finalizer; replicate i gets its own deterministic stream
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + 0x9e3779b97f4a7c15ull * (index + 1));
}

}  // namespace detail

// one negative binomial draw: offspring of a single individual
inline std::uint64_t sample_offspring(const ParamsD& p, std::mt19937_64& eng) {
  std::negative_binomial_distribution<long long> dist(p.r, nb_success(p));
  return static_cast<std::uint64_t>(dist(eng));
}

// total offspring of `count` individuals in one draw: a sum of independent
// NB(r, p) variables is NB(count*r, p), so one variate is exact in law
inline std::uint64_t sample_total_offspring(const ParamsD& p, std::uint64_t count, std::mt19937_64& eng) {
  if (count == 0) return 0;
  std::negative_binomial_distribution<long long> dist(static_cast<long long>(count) * p.r, nb_success(p));
  return static_cast<std::uint64_t>(dist(eng));
}

inline SimReport run_simulation(const SimConfig& cfg) {
  if (cfg.replicates == 0) throw std::domain_error("run_simulation: replicates >= 1 required");
  if (cfg.population_cap == 0) throw std::domain_error("run_simulation: population cap >= 1 required");
  SimReport rep;
  rep.config = cfg;
  rep.alive_at.assign(cfg.max_generations + 1, 0);
  rep.extinct_by.assign(cfg.max_generations + 1, 0);
  for (std::uint64_t i = 0; i < cfg.replicates; ++i) {
    std::mt19937_64 eng(detail::replicate_seed(cfg.seed, i));
    std::uint64_t pop = 1;
    std::uint64_t died_at = 0;
    bool extinct = false;
    for (std::uint64_t gen = 1; gen <= cfg.max_generations; ++gen) {
      if (pop >= cfg.population_cap) break;  // survival is settled
      pop = sample_total_offspring(cfg.params, pop, eng);
      if (pop == 0) {
        extinct = true;
        died_at = gen;
        break;
      }
    }
    if (extinct) {
      ++rep.extinct;
      for (std::uint64_t n = died_at; n <= cfg.max_generations; ++n) ++rep.extinct_by[n];
      for (std::uint64_t n = 0; n < died_at; ++n) ++rep.alive_at[n];
    } else {
      if (pop >= cfg.population_cap)
        ++rep.survived;
      else
        ++rep.censored;
      for (std::uint64_t n = 0; n <= cfg.max_generations; ++n) ++rep.alive_at[n];
    }
  }
  return rep;
}

// empirical pgf of the offspring law against the closed form
struct PgfProbe {
  std::vector<double> xs;
  std::vector<double> empirical;  // mean of x^K over the draws
  std::vector<double> expected;   // phi_NB(x)
  std::vector<double> sigma;      // exact std dev of the estimator
  std::uint64_t draws = 0;
};

inline PgfProbe probe_offspring_pgf(const ParamsD& p, std::uint64_t draws, std::uint64_t seed,
                                    std::vector<double> xs = {0.1, 0.3, 0.5, 0.7, 0.9}) {
  if (draws == 0) throw std::domain_error("probe_offspring_pgf: draws >= 1 required");
  PgfProbe probe;
  probe.xs = std::move(xs);
  probe.draws = draws;
  std::mt19937_64 eng(detail::mix64(seed));
  std::vector<double> acc(probe.xs.size(), 0.0);
  for (std::uint64_t i = 0; i < draws; ++i) {
    const auto k = static_cast<long long>(sample_offspring(p, eng));
    for (std::size_t j = 0; j < probe.xs.size(); ++j) acc[j] += pow_int(probe.xs[j], k);
  }
  for (std::size_t j = 0; j < probe.xs.size(); ++j) {
    const double x = probe.xs[j];
    const double mean = phi_nb(p, x);
    probe.empirical.push_back(acc[j] / static_cast<double>(draws));
    probe.expected.push_back(mean);
    // Var(x^K) = phi(x^2) - phi(x)^2, all exact pgf values
    const double var = phi_nb(p, x * x) - mean * mean;
    probe.sigma.push_back(std::sqrt(std::max(var, 0.0) / static_cast<double>(draws)));
  }
  return probe;
}

}  // namespace gwnb
