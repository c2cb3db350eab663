#pragma once

#include <cmath>
#include <cstdint>

namespace boxhunt {

// Compensated (Kahan) accumulator. Reductions over rows/trials must happen in
// a fixed order so repeated runs and the parallel drivers are bit-identical;
// pairing that with compensation keeps long float64 sums accurate.
class KahanSum {
 public:
  void add(double v) {
    double y = v - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

inline double ipow(double x, unsigned e) {
  double r = 1.0;
  while (e) {
    if (e & 1u) r *= x;
    x *= x;
    e >>= 1u;
  }
  return r;
}

inline bool is_zero(double x) { return x == 0.0; }

}  // namespace boxhunt
