#include "boxhunt/exact.hpp"

#include <stdexcept>

namespace boxhunt {

BoundComparison compare_to_bound(const SpeedupReport& r) {
  BoundValue b;
  switch (r.strategy) {
    case StrategyId::Trivial:
      b = {1.0, 1, 1, BoundKind::exact_optimum};  // no speed-up to be had
      break;
    case StrategyId::StocAdversarial:
      b = adversarial_bound(r.k);
      break;
    case StrategyId::OptUniform:
      b = uniform_bound(r.k);
      break;
    case StrategyId::Memoryless:
      b = memoryless_bound(r.k);
      break;
    case StrategyId::PartitionCoordinated:
      // coordinated searchers split the line perfectly
      b = {static_cast<double>(r.k), r.k, 1, BoundKind::exact_optimum};
      break;
    default:
      throw std::invalid_argument("no reference bound for this strategy");
  }
  return {b, r.speedup_inv_theta / b.value};
}

void attach_bound(SpeedupReport& r) {
  const BoundComparison c = compare_to_bound(r);
  r.bound = c.bound.value;
  r.ratio = c.ratio;
  r.bound_kind = bound_kind_name(c.bound.kind);
}

}  // namespace boxhunt
