#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace boxhunt {

// Where kernels may run. `parallel` uses the OpenMP drivers; `serial` is the
// reference path the tests compare against (results are bit-identical, since
// partial results are always reduced in a fixed order).
enum class Exec { serial, parallel };

enum class NumericMode { exact_rational, float64 };

enum class StrategyId {
  Trivial,               // open box t at step t
  StocAdversarial,       // two uniform picks per phase among unchecked in {1..i(k+1)}
  OptUniform,            // one uniform pick among unchecked in {1..t*k}, then uniform cleanup
  Memoryless,            // uniform pick (with replacement) in {1..t*k}, then in {1..m} forever
  PartitionCoordinated,  // coordinated baseline: searcher j owns boxes j+1, j+1+k, ...
};

const char* strategy_name(StrategyId s);
std::optional<StrategyId> parse_strategy(const std::string& name);
bool strategy_has_memory(StrategyId s);  // never re-opens a box

struct Placement {
  bool uniform = true;
  std::int64_t fixed_x = 0;  // meaningful when !uniform

  static Placement uniform_boxes() { return {}; }
  static Placement fixed(std::int64_t x) { return {false, x}; }
};

struct ProblemInstance {
  std::int64_t m = 0;  // boxes, labelled 1..m
  int k = 1;           // searchers
  Placement placement;
};

// nullopt when valid, otherwise the reason.
std::optional<std::string> validate_instance(const ProblemInstance& inst);

// OptUniform and Memoryless phase ranges are multiples of k; their instances
// run on m rounded up to the next multiple (reported as the effective m).
std::int64_t effective_box_count(StrategyId s, std::int64_t m, int k);

enum class PoolKind {
  unchecked_in_range,  // uniform among not-yet-opened boxes <= range_end
  all_in_range,        // uniform among all boxes <= range_end (no memory)
};

struct ScheduleEntry {
  std::int64_t range_end = 0;
  PoolKind pool = PoolKind::unchecked_in_range;
  std::int64_t pool_size = 0;  // candidates at this step, >= 1
};

// One searcher's box-selection process, one entry per step t = 1, 2, ...
// Memoryless schedules continue past the explicit entries picking uniformly
// from {1..tail_pool_size} forever. PartitionCoordinated is not a shared
// random pool — searcher j deterministically opens box (j+1) + (t-1)*k — so it
// is recorded via `interleaved_k` with `entries` empty.
struct SelectionSchedule {
  StrategyId strategy = StrategyId::Trivial;
  std::int64_t m = 0;  // effective box count
  int k = 1;           // parameter the schedule was built for
  std::vector<ScheduleEntry> entries;
  std::optional<std::int64_t> tail_pool_size;
  std::optional<int> interleaved_k;
};

SelectionSchedule build_schedule(StrategyId s, const ProblemInstance& inst);

}  // namespace boxhunt
