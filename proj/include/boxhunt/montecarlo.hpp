#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxhunt/report.hpp"
#include "boxhunt/strategy.hpp"

namespace boxhunt {

struct CrashEvent {
  int searcher = 0;        // 0-based, < k
  std::int64_t step = 0;   // opens boxes while t <= step; 0 = never opens any
};

struct SimConfig {
  ProblemInstance instance;  // m is normalized to the strategy's effective m
  StrategyId strategy = StrategyId::Trivial;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<CrashEvent> crashes;
  std::int64_t max_steps = 0;  // 0 -> 64 * k * m
  bool per_x = false;          // bucketed per-box stats (needs trials >= 100*m)
};

std::optional<std::string> validate_config(const SimConfig& cfg);
std::int64_t default_max_steps(const SimConfig& cfg);

struct TrialOutcome {
  std::int64_t treasure_x = 0;
  std::optional<std::int64_t> find_time;  // nullopt: not found
  std::optional<int> finder;              // lowest searcher index at that step
};

// One trial, fully determined by (cfg, treasure_x, trial_index): searcher s
// consumes substream (cfg.seed, trial_index, s), all live searchers open one
// box per step, and the step at which any of them hits the treasure is the
// find time. Returns not_found when every searcher is exhausted or crashed,
// or after max_steps (reachable only for memoryless searchers or full
// crashes).
TrialOutcome simulate_run(const SimConfig& cfg, std::int64_t treasure_x,
                          std::int64_t trial_index);

// theta-hat = mean over trials of find_time / x, with x drawn uniformly per
// trial (substream (seed, trial, k)) or fixed by the placement; stderr is the
// sample standard deviation / sqrt(found trials). Trials run independently
// (the parallel driver distributes them) and are reduced in trial order, so
// results are bit-identical across serial/parallel and across runs. Trials
// that never find the treasure set `not_found`/`incomplete` and are excluded
// from the mean, which is then an estimate over found trials only.
SpeedupReport estimate_theta(const SimConfig& cfg, Exec exec = Exec::parallel);

struct CrashExperimentResult {
  SpeedupReport report;
  double found_fraction = 1.0;
};

// estimate_theta with the crash plan applied, plus the fraction of trials
// that found the treasure at all.
CrashExperimentResult crash_experiment(const SimConfig& cfg,
                                       Exec exec = Exec::parallel);

}  // namespace boxhunt
