#include "boxhunt/strategy.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxhunt {

const char* strategy_name(StrategyId s) {
  switch (s) {
    case StrategyId::Trivial: return "trivial";
    case StrategyId::StocAdversarial: return "stoc";
    case StrategyId::OptUniform: return "opt";
    case StrategyId::Memoryless: return "memoryless";
    case StrategyId::PartitionCoordinated: return "partition";
  }
  return "unknown";
}

std::optional<StrategyId> parse_strategy(const std::string& name) {
  if (name == "trivial") return StrategyId::Trivial;
  if (name == "stoc") return StrategyId::StocAdversarial;
  if (name == "opt") return StrategyId::OptUniform;
  if (name == "memoryless") return StrategyId::Memoryless;
  if (name == "partition") return StrategyId::PartitionCoordinated;
  return std::nullopt;
}

bool strategy_has_memory(StrategyId s) { return s != StrategyId::Memoryless; }

std::optional<std::string> validate_instance(const ProblemInstance& inst) {
  if (inst.m <= 0) return "m must be positive";
  if (inst.k < 1) return "k must be at least 1";
  if (!inst.placement.uniform &&
      (inst.placement.fixed_x < 1 || inst.placement.fixed_x > inst.m))
    return "fixed treasure position must lie in 1..m";
  return std::nullopt;
}

std::int64_t effective_box_count(StrategyId s, std::int64_t m, int k) {
  if (s == StrategyId::OptUniform || s == StrategyId::Memoryless)
    return ((m + k - 1) / k) * k;
  return m;
}

SelectionSchedule build_schedule(StrategyId s, const ProblemInstance& inst) {
  if (auto err = validate_instance(inst)) throw std::invalid_argument(*err);

  const int k = inst.k;
  SelectionSchedule sched;
  sched.strategy = s;
  sched.k = k;
  sched.m = effective_box_count(s, inst.m, k);
  const std::int64_t m = sched.m;

  switch (s) {
    case StrategyId::Trivial:
      // Degenerate pools: exactly one candidate (box t) at step t.
      for (std::int64_t t = 1; t <= m; ++t)
        sched.entries.push_back({t, PoolKind::unchecked_in_range, 1});
      break;

    case StrategyId::OptUniform: {
      // Growing-range phase: step t picks uniformly among the unchecked boxes
      // in {1..t*k}; t-1 boxes are already open, all of them inside the range.
      std::int64_t opened = 0;
      for (std::int64_t t = 1; t <= m / k; ++t) {
        const std::int64_t range = t * k;
        sched.entries.push_back(
            {range, PoolKind::unchecked_in_range, range - opened});
        ++opened;
      }
      // Cleanup: uniform among whatever is still unchecked anywhere.
      while (opened < m) {
        sched.entries.push_back(
            {m, PoolKind::unchecked_in_range, m - opened});
        ++opened;
      }
      break;
    }

    case StrategyId::StocAdversarial: {
      // Phase i makes two uniform unchecked picks in {1..i*(k+1)}. Ranges are
      // capped at m; once capped the pool simply shrinks until every box is
      // open.
      std::int64_t opened = 0;
      for (std::int64_t i = 1; opened < m; ++i) {
        const std::int64_t range = std::min<std::int64_t>(i * (k + 1), m);
        for (int pick = 0; pick < 2 && opened < m; ++pick) {
          sched.entries.push_back(
              {range, PoolKind::unchecked_in_range, range - opened});
          ++opened;
        }
      }
      break;
    }

    case StrategyId::Memoryless:
      // Same ranges as OptUniform but sampled with replacement; afterwards a
      // uniform pick over all m boxes, forever (constant tail).
      for (std::int64_t t = 1; t <= m / k; ++t)
        sched.entries.push_back({t * k, PoolKind::all_in_range, t * k});
      sched.tail_pool_size = m;
      break;

    case StrategyId::PartitionCoordinated:
      sched.interleaved_k = k;
      break;
  }
  return sched;
}

}  // namespace boxhunt
