#include "boxhunt/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "boxhunt/numeric.hpp"
#include "boxhunt/rng.hpp"

namespace boxhunt {

std::int64_t default_max_steps(const SimConfig& cfg) {
  return cfg.max_steps > 0 ? cfg.max_steps
                           : 64 * static_cast<std::int64_t>(cfg.instance.k) *
                                 cfg.instance.m;
}

std::optional<std::string> validate_config(const SimConfig& cfg) {
  if (auto err = validate_instance(cfg.instance)) return err;
  if (cfg.instance.m !=
      effective_box_count(cfg.strategy, cfg.instance.m, cfg.instance.k))
    return "instance m must be the strategy's effective box count";
  if (cfg.trials < 1) return "trials must be at least 1";
  for (const auto& c : cfg.crashes) {
    if (c.searcher < 0 || c.searcher >= cfg.instance.k)
      return "crash searcher index must lie in 0..k-1";
    if (c.step < 0) return "crash step must be >= 0";
  }
  return std::nullopt;
}

namespace {

// One searcher's sampler. With-memory pools are an index-addressable array
// with swap-remove, so every pick is O(1); ranges extend by appending the
// newly admitted boxes. A return of 0 means "nothing left to open", and for
// every strategy that can return 0 it is permanent (with-memory pools only
// empty once all reachable boxes are open; a partition searcher past the end
// of its arithmetic progression stays past it).
class SearcherSim {
 public:
  SearcherSim(StrategyId s, std::int64_t m, int k, int index)
      : strat_(s), m_(m), k_(k), index_(index) {
    if (s == StrategyId::OptUniform || s == StrategyId::StocAdversarial)
      pool_.reserve(static_cast<std::size_t>(m));
  }

  std::int64_t step(std::int64_t t, Xoshiro256ss& rng) {
    switch (strat_) {
      case StrategyId::Trivial:
        return t <= m_ ? t : 0;

      case StrategyId::PartitionCoordinated: {
        const std::int64_t box = (index_ + 1) + (t - 1) * k_;
        return box <= m_ ? box : 0;
      }

      case StrategyId::OptUniform:
        if (t <= m_ / k_) extend_to(t * k_);
        return draw_from_pool(rng);

      case StrategyId::StocAdversarial: {
        const std::int64_t phase = (t + 1) / 2;  // two picks per phase
        extend_to(std::min(phase * (k_ + 1), m_));
        return draw_from_pool(rng);
      }

      case StrategyId::Memoryless: {
        const std::int64_t range = t <= m_ / k_ ? t * k_ : m_;
        return 1 + static_cast<std::int64_t>(
                       rng.below(static_cast<std::uint64_t>(range)));
      }
    }
    return 0;
  }

 private:
  void extend_to(std::int64_t r) {
    for (std::int64_t b = watermark_ + 1; b <= r; ++b) pool_.push_back(b);
    watermark_ = std::max(watermark_, r);
  }

  std::int64_t draw_from_pool(Xoshiro256ss& rng) {
    if (pool_.empty()) return 0;
    const std::size_t i = static_cast<std::size_t>(rng.below(pool_.size()));
    const std::int64_t box = pool_[i];
    pool_[i] = pool_.back();
    pool_.pop_back();
    return box;
  }

  StrategyId strat_;
  std::int64_t m_;
  int k_;
  int index_;
  std::vector<std::int64_t> pool_;
  std::int64_t watermark_ = 0;
};

}  // namespace

TrialOutcome simulate_run(const SimConfig& cfg, std::int64_t treasure_x,
                          std::int64_t trial_index) {
  const int k = cfg.instance.k;
  const std::int64_t m = cfg.instance.m;
  const std::int64_t max_steps = default_max_steps(cfg);

  std::vector<std::int64_t> crash_step(static_cast<std::size_t>(k), -1);
  for (const auto& c : cfg.crashes)
    crash_step[static_cast<std::size_t>(c.searcher)] = c.step;

  std::vector<SearcherSim> sims;
  std::vector<Xoshiro256ss> rngs;
  sims.reserve(static_cast<std::size_t>(k));
  rngs.reserve(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) {
    sims.emplace_back(cfg.strategy, m, k, s);
    rngs.push_back(substream(cfg.seed, static_cast<std::uint64_t>(trial_index),
                             static_cast<std::uint64_t>(s)));
  }

  for (std::int64_t t = 1; t <= max_steps; ++t) {
    bool any_active = false;
    for (int s = 0; s < k; ++s) {
      if (crash_step[static_cast<std::size_t>(s)] >= 0 &&
          t > crash_step[static_cast<std::size_t>(s)])
        continue;  // crashed: opens nothing from here on
      const std::int64_t box =
          sims[static_cast<std::size_t>(s)].step(t, rngs[static_cast<std::size_t>(s)]);
      if (box == 0) continue;
      any_active = true;
      if (box == treasure_x) return {treasure_x, t, s};
    }
    if (!any_active) return {treasure_x, std::nullopt, std::nullopt};
  }
  return {treasure_x, std::nullopt, std::nullopt};
}

SpeedupReport estimate_theta(const SimConfig& cfg, Exec exec) {
  if (auto err = validate_config(cfg)) throw std::invalid_argument(*err);
  const std::int64_t n = cfg.trials;
  const std::int64_t m = cfg.instance.m;
  const int k = cfg.instance.k;

  std::vector<std::int64_t> xs(static_cast<std::size_t>(n));
  std::vector<std::int64_t> times(static_cast<std::size_t>(n), 0);

  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t x;
    if (cfg.instance.placement.uniform) {
      auto rng = substream(cfg.seed, static_cast<std::uint64_t>(i),
                           static_cast<std::uint64_t>(k));
      x = 1 + static_cast<std::int64_t>(
                  rng.below(static_cast<std::uint64_t>(m)));
    } else {
      x = cfg.instance.placement.fixed_x;
    }
    const TrialOutcome out = simulate_run(cfg, x, i);
    xs[static_cast<std::size_t>(i)] = x;
    times[static_cast<std::size_t>(i)] = out.find_time.value_or(0);
  }

  // Reduction in trial order, independent of how trials were scheduled.
  std::int64_t found = 0;
  KahanSum sum;
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (times[idx] == 0) continue;
    ++found;
    sum.add(static_cast<double>(times[idx]) / static_cast<double>(xs[idx]));
  }
  const double mean = found > 0 ? sum.value() / static_cast<double>(found) : 0.0;

  KahanSum sq;
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (times[idx] == 0) continue;
    const double d =
        static_cast<double>(times[idx]) / static_cast<double>(xs[idx]) - mean;
    sq.add(d * d);
  }
  const double stderr_v =
      found > 1 ? std::sqrt(sq.value() / static_cast<double>(found - 1) /
                            static_cast<double>(found))
                : 0.0;

  SpeedupReport r;
  r.strategy = cfg.strategy;
  r.k = k;
  r.m = m;
  r.mode = ReportMode::montecarlo;
  r.theta = mean;
  r.speedup_inv_theta = found > 0 ? 1.0 / mean : 0.0;
  r.stderr_value = stderr_v;
  r.trials = n;
  r.seed = cfg.seed;
  r.found_fraction = static_cast<double>(found) / static_cast<double>(n);
  if (found < n) {
    r.not_found = n - found;
    r.incomplete = true;  // theta covers found trials only
  }

  // Per-box buckets are only statistically meaningful with >= 100 samples per
  // box on average; below that they are omitted rather than reported noisy.
  if (cfg.per_x && n >= 100 * m) {
    std::vector<double> bucket_sum(static_cast<std::size_t>(m) + 1, 0.0);
    std::vector<std::int64_t> bucket_n(static_cast<std::size_t>(m) + 1, 0);
    for (std::int64_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      if (times[idx] == 0) continue;
      bucket_sum[static_cast<std::size_t>(xs[idx])] +=
          static_cast<double>(times[idx]);
      ++bucket_n[static_cast<std::size_t>(xs[idx])];
    }
    bool complete = true;
    if (cfg.instance.placement.uniform) {
      for (std::int64_t x = 1; x <= m; ++x)
        if (bucket_n[static_cast<std::size_t>(x)] == 0) complete = false;
    } else {
      complete = bucket_n[static_cast<std::size_t>(
                     cfg.instance.placement.fixed_x)] > 0;
    }
    if (complete) {
      std::vector<PerBoxStat> per;
      KahanSum mean_acc;
      std::int64_t boxes = 0;
      for (std::int64_t x = 1; x <= m; ++x) {
        const auto xi = static_cast<std::size_t>(x);
        if (bucket_n[xi] == 0) continue;  // fixed placement: single bucket
        const double mt = bucket_sum[xi] / static_cast<double>(bucket_n[xi]);
        per.push_back({x, mt, mt / static_cast<double>(x)});
        mean_acc.add(static_cast<double>(x) / mt);
        ++boxes;
      }
      r.per_x = std::move(per);
      r.speedup_mean = mean_acc.value() / static_cast<double>(boxes);
    }
  }
  return r;
}

CrashExperimentResult crash_experiment(const SimConfig& cfg, Exec exec) {
  SpeedupReport r = estimate_theta(cfg, exec);
  const double ff = r.found_fraction.value_or(1.0);
  return {std::move(r), ff};
}

}  // namespace boxhunt
