#pragma once

#include <cstdint>

namespace boxhunt {

enum class BoundKind { exact_optimum, asymptotic_lower_bound };

const char* bound_kind_name(BoundKind k);

struct BoundValue {
  double value = 0;
  long long num = 0, den = 1;  // exact fraction, lowest terms
  BoundKind kind = BoundKind::exact_optimum;
};

// Best possible speed-up of k non-coordinating searchers with uniform
// placement: k(k+1)/(3k-1).
BoundValue uniform_bound(int k);

// Adversarial-placement optimum: (k/4)(1+1/k)^2 = (k+1)^2/(4k).
BoundValue adversarial_bound(int k);

// Memoryless searchers reach speed-up k/3 only in the large-k/large-m limit;
// tagged as an asymptotic lower bound, never an exact optimum.
BoundValue memoryless_bound(int k);

// uniform_bound(k) / adversarial_bound(k); tends to 4/3 from below.
double gap_ratio(int k);
double asymptotic_gap_limit();  // 4/3

// prod_{i=a}^{b} i/(i+phi) <= (a/b)^phi for 1 <= a <= b, phi in [0,1].
// The product telescopes to a ratio of Gamma values, so long ranges are
// evaluated via lgamma; short ranges multiply directly. Both are exposed so
// the two evaluations can be cross-checked.
struct GammaProductCheck {
  double lhs = 0, rhs = 0;
  bool holds = false;
};
GammaProductCheck gamma_product_check(std::int64_t a, std::int64_t b,
                                      double phi, double slack = 1e-12);
double gamma_product_lhs_direct(std::int64_t a, std::int64_t b, double phi);
double gamma_product_lhs_log(std::int64_t a, std::int64_t b, double phi);

}  // namespace boxhunt
