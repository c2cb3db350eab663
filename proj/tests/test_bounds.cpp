#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "boxhunt/bounds.hpp"

using namespace boxhunt;

TEST_CASE("optimal speed-up bound k(k+1)/(3k-1)") {
  const auto b2 = uniform_bound(2);
  CHECK(b2.num == 6);
  CHECK(b2.den == 5);
  CHECK(b2.value == doctest::Approx(1.2));
  const auto b3 = uniform_bound(3);
  CHECK(b3.num == 3);
  CHECK(b3.den == 2);
  const auto b10 = uniform_bound(10);
  CHECK(b10.num == 110);
  CHECK(b10.den == 29);
  CHECK(uniform_bound(1).value == doctest::Approx(1.0));
  CHECK(b2.kind == BoundKind::exact_optimum);
}

TEST_CASE("robust-to-one-crash speed-up bound (k+1)^2/(4k)") {
  const auto a2 = adversarial_bound(2);
  CHECK(a2.num == 9);
  CHECK(a2.den == 8);
  const auto a3 = adversarial_bound(3);
  CHECK(a3.num == 4);
  CHECK(a3.den == 3);
  CHECK(adversarial_bound(1).value == doctest::Approx(1.0));
  CHECK(a2.kind == BoundKind::exact_optimum);
}

TEST_CASE("memoryless speed-up lower bound k/3") {
  const auto m3 = memoryless_bound(3);
  CHECK(m3.num == 1);
  CHECK(m3.den == 1);
  CHECK(memoryless_bound(6).value == doctest::Approx(2.0));
  CHECK(m3.kind == BoundKind::asymptotic_lower_bound);
}

TEST_CASE("gap between the crash-robust and crash-free optima") {
  CHECK(gap_ratio(2) == doctest::Approx(16.0 / 15.0));
  CHECK(gap_ratio(100) == doctest::Approx(40000.0 / 30199.0));
  CHECK(asymptotic_gap_limit() == doctest::Approx(4.0 / 3.0));
  // The gap approaches its limit from below and is within 2% by k = 100.
  CHECK(gap_ratio(100) < 4.0 / 3.0);
  CHECK(gap_ratio(100) > (4.0 / 3.0) * 0.98);
  CHECK(gap_ratio(1000) > gap_ratio(100));
}

TEST_CASE("bounds reject k < 1") {
  CHECK_THROWS_AS(uniform_bound(0), std::invalid_argument);
  CHECK_THROWS_AS(adversarial_bound(0), std::invalid_argument);
  CHECK_THROWS_AS(memoryless_bound(-1), std::invalid_argument);
  CHECK_THROWS_AS(gap_ratio(0), std::invalid_argument);
}

TEST_CASE("rising-factorial ratio inequality: frozen example") {
  const auto gc = gamma_product_check(2, 3, 0.5);
  CHECK(gc.lhs == doctest::Approx(0.685714).epsilon(1e-5));
  CHECK(gc.rhs == doctest::Approx(0.816497).epsilon(1e-5));
  CHECK(gc.holds);
}

TEST_CASE("rising-factorial ratio inequality: edge cases") {
  // phi = 0 and phi = 1 make both sides trivially comparable.
  CHECK(gamma_product_check(5, 9, 0.0).holds);
  CHECK(gamma_product_check(5, 9, 1.0).holds);
  // a == b: one factor a/(a+phi) on the left against 1 on the right.
  const auto eq = gamma_product_check(7, 7, 0.37);
  CHECK(eq.holds);
  CHECK(eq.lhs == doctest::Approx(7.0 / 7.37));
  CHECK(eq.rhs == doctest::Approx(1.0));
}

TEST_CASE("direct and log-gamma evaluations of the product agree") {
  for (const std::int64_t a : {1, 2, 17}) {
    for (const std::int64_t span : {0, 1, 5, 100, 1000}) {
      const std::int64_t b = a + span;
      for (const double phi : {0.1, 0.5, 0.9}) {
        const double direct = gamma_product_lhs_direct(a, b, phi);
        const double viaLog = gamma_product_lhs_log(a, b, phi);
        CHECK(viaLog == doctest::Approx(direct).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("the inequality holds across a deterministic sweep") {
  for (std::int64_t a = 1; a <= 40; a += 3)
    for (std::int64_t b = a; b <= a + 2000; b = b * 2 + 1)
      for (const double phi : {0.0, 0.13, 0.5, 0.77, 1.0})
        CHECK(gamma_product_check(a, b, phi).holds);
}

TEST_CASE("gamma product argument validation") {
  CHECK_THROWS_AS(gamma_product_check(0, 3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(gamma_product_check(4, 3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(gamma_product_check(1, 3, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(gamma_product_check(1, 3, 1.1), std::invalid_argument);
}
