#include "boxhunt/bounds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace boxhunt {

const char* bound_kind_name(BoundKind k) {
  return k == BoundKind::exact_optimum ? "exact_optimum"
                                       : "asymptotic_lower_bound";
}

namespace {

BoundValue make_bound(long long num, long long den, BoundKind kind) {
  const long long g = std::gcd(num, den);
  num /= g;
  den /= g;
  return {static_cast<double>(num) / static_cast<double>(den), num, den, kind};
}

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

}  // namespace

BoundValue uniform_bound(int k) {
  require_k(k);
  const long long kk = k;
  return make_bound(kk * (kk + 1), 3 * kk - 1, BoundKind::exact_optimum);
}

BoundValue adversarial_bound(int k) {
  require_k(k);
  const long long kk = k;
  return make_bound((kk + 1) * (kk + 1), 4 * kk, BoundKind::exact_optimum);
}

BoundValue memoryless_bound(int k) {
  require_k(k);
  return make_bound(k, 3, BoundKind::asymptotic_lower_bound);
}

double gap_ratio(int k) {
  return uniform_bound(k).value / adversarial_bound(k).value;
}

double asymptotic_gap_limit() { return 4.0 / 3.0; }

namespace {

void require_gamma_args(std::int64_t a, std::int64_t b, double phi) {
  if (a < 1 || b < a) throw std::invalid_argument("need 1 <= a <= b");
  if (!(phi >= 0.0 && phi <= 1.0))
    throw std::invalid_argument("phi must lie in [0,1]");
}

}  // namespace

double gamma_product_lhs_direct(std::int64_t a, std::int64_t b, double phi) {
  require_gamma_args(a, b, phi);
  double p = 1.0;
  for (std::int64_t i = a; i <= b; ++i)
    p *= static_cast<double>(i) / (static_cast<double>(i) + phi);
  return p;
}

double gamma_product_lhs_log(std::int64_t a, std::int64_t b, double phi) {
  require_gamma_args(a, b, phi);
  // prod i = Gamma(b+1)/Gamma(a), prod (i+phi) = Gamma(b+1+phi)/Gamma(a+phi)
  const double ad = static_cast<double>(a), bd = static_cast<double>(b);
  const double lg = std::lgamma(bd + 1.0) - std::lgamma(ad) -
                    std::lgamma(bd + 1.0 + phi) + std::lgamma(ad + phi);
  return std::exp(lg);
}

GammaProductCheck gamma_product_check(std::int64_t a, std::int64_t b,
                                      double phi, double slack) {
  const double lhs = (b - a <= 1024) ? gamma_product_lhs_direct(a, b, phi)
                                     : gamma_product_lhs_log(a, b, phi);
  const double rhs =
      std::pow(static_cast<double>(a) / static_cast<double>(b), phi);
  return {lhs, rhs, lhs <= rhs + slack};
}

}  // namespace boxhunt
