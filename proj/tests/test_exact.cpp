#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "boxhunt/exact.hpp"

using namespace boxhunt;

namespace {

ProblemInstance uni(std::int64_t m, int k) {
  return {m, k, Placement::uniform_boxes()};
}

Rational Q(long n, long d = 1) { return make_rational(n, d); }

// Independent oracle for with-memory pooled schedules at small m: enumerate
// every possible open-order of one searcher. Pool sizes are deterministic
// (ranges and the number of already-open boxes don't depend on the random
// picks), so every enumerated order has the same probability, and
//   N(x, t) = (# orders whose first t opens avoid x) / (# orders).
// This never touches the product-form storage the library uses.
struct OrderEnumeration {
  std::int64_t m = 0;
  std::vector<std::vector<std::int64_t>> orders;

  explicit OrderEnumeration(const SelectionSchedule& sched) : m(sched.m) {
    std::vector<std::int64_t> prefix;
    std::vector<bool> open(static_cast<std::size_t>(m) + 1, false);
    walk(sched, prefix, open);
  }

  void walk(const SelectionSchedule& sched, std::vector<std::int64_t>& prefix,
            std::vector<bool>& open) {
    const std::size_t t = prefix.size();
    if (t == sched.entries.size()) {
      orders.push_back(prefix);
      return;
    }
    const ScheduleEntry& e = sched.entries[t];
    std::vector<std::int64_t> pool;
    for (std::int64_t x = 1; x <= e.range_end; ++x)
      if (!open[static_cast<std::size_t>(x)]) pool.push_back(x);
    REQUIRE(static_cast<std::int64_t>(pool.size()) == e.pool_size);
    for (const std::int64_t x : pool) {
      open[static_cast<std::size_t>(x)] = true;
      prefix.push_back(x);
      walk(sched, prefix, open);
      prefix.pop_back();
      open[static_cast<std::size_t>(x)] = false;
    }
  }

  // P(box x not opened within the first t steps), exactly.
  Rational non_visit(std::int64_t x, std::int64_t t) const {
    std::int64_t cnt = 0;
    for (const auto& ord : orders) {
      const auto end = ord.begin() + std::min<std::int64_t>(
                                         t, static_cast<std::int64_t>(ord.size()));
      if (std::find(ord.begin(), end, x) == end) ++cnt;
    }
    return Q(static_cast<long>(cnt), static_cast<long>(orders.size()));
  }

  Rational expected_time(std::int64_t x, int k, std::int64_t horizon) const {
    Rational acc = 0;
    for (std::int64_t t = 0; t < horizon; ++t)
      acc += ipow(non_visit(x, t), static_cast<unsigned>(k));
    return acc;
  }
};

}  // namespace

TEST_CASE("non-visit matrix for two searchers on six boxes, all entries") {
  const auto M = build_matrix<Rational>(
      build_schedule(StrategyId::OptUniform, uni(6, 2)));
  REQUIRE(M.horizon == 6);
  const Rational row12[] = {Q(1), Q(1, 2),  Q(1, 3), Q(1, 4),
                            Q(1, 6), Q(1, 12), Q(0)};
  const Rational row34[] = {Q(1), Q(1), Q(2, 3), Q(1, 2),
                            Q(1, 3), Q(1, 6), Q(0)};
  const Rational row56[] = {Q(1), Q(1), Q(1), Q(3, 4),
                            Q(1, 2), Q(1, 4), Q(0)};
  for (std::int64_t t = 0; t <= 6; ++t) {
    for (std::int64_t x : {1, 2}) CHECK(M.entry(x, t) == row12[t]);
    for (std::int64_t x : {3, 4}) CHECK(M.entry(x, t) == row34[t]);
    for (std::int64_t x : {5, 6}) CHECK(M.entry(x, t) == row56[t]);
  }
}

TEST_CASE("expected visit times on the six-box instance") {
  const auto M = build_matrix<Rational>(
      build_schedule(StrategyId::OptUniform, uni(6, 2)));
  CHECK(expected_visit_time(M, 1, 1) == Q(7, 3));
  CHECK(expected_visit_time(M, 1, 2) == Q(35, 24));
  CHECK(expected_visit_time(M, 3, 2) == Q(17, 6));
  CHECK(expected_visit_time(M, 5, 2) == Q(31, 8));
}

TEST_CASE("theta for two searchers on six boxes, exact") {
  const auto M = build_matrix<Rational>(
      build_schedule(StrategyId::OptUniform, uni(6, 2)));
  const auto r = theta(M, 2, Placement::uniform_boxes());
  REQUIRE(r.theta_exact.has_value());
  CHECK(*r.theta_exact == "947/1080");
  CHECK(*r.speedup_inv_theta_exact == "1080/947");
  CHECK(r.numeric_mode == NumericMode::exact_rational);
  CHECK(r.m == 6);
  CHECK(r.k == 2);
  // Jensen: the mean of per-box speed-ups dominates the inverse of theta.
  REQUIRE(r.speedup_mean.has_value());
  CHECK(*r.speedup_mean >= r.speedup_inv_theta);
}

TEST_CASE("order enumeration agrees with the product-form matrix") {
  for (const StrategyId s : {StrategyId::Trivial, StrategyId::OptUniform,
                             StrategyId::StocAdversarial}) {
    const auto sched = build_schedule(s, uni(6, 2));
    const auto M = build_matrix<Rational>(sched);
    const OrderEnumeration oracle(sched);
    for (std::int64_t x = 1; x <= 6; ++x)
      for (std::int64_t t = 0; t <= M.horizon; ++t)
        CHECK(M.entry(x, t) == oracle.non_visit(x, t));
    for (int k = 1; k <= 3; ++k)
      for (std::int64_t x = 1; x <= 6; ++x)
        CHECK(expected_visit_time(M, x, k) ==
              oracle.expected_time(x, k, M.horizon));
  }
}

TEST_CASE("memoryless entries, tail, and expected-time identity") {
  const auto sched = build_schedule(StrategyId::Memoryless, uni(6, 2));
  const auto M = build_matrix<Rational>(sched);
  CHECK(M.entry(2, 1) == Q(1, 2));
  CHECK(M.entry(2, 2) == Q(3, 8));

  // Schedule-driven recurrence, independent of the matrix storage:
  // v(x,t) = v(x,t-1) * (pool-1)/pool when x is inside step t's range.
  const std::int64_t T = 40;
  std::vector<std::vector<Rational>> v(7, std::vector<Rational>(T + 1, Q(1)));
  for (std::int64_t x = 1; x <= 6; ++x)
    for (std::int64_t t = 1; t <= T; ++t) {
      const std::int64_t range = t <= 3 ? 2 * t : 6;
      const std::int64_t pool = t <= 3 ? 2 * t : 6;
      v[x][t] = v[x][t - 1];
      if (x <= range) v[x][t] *= Q(pool - 1, pool);
    }
  for (std::int64_t x = 1; x <= 6; ++x)
    for (std::int64_t t = 0; t <= T; ++t)
      CHECK(M.entry(x, t) == v[x][t]);

  // E[T_x] minus the truncated sum must equal the geometric remainder of the
  // recurrence values: sum_{t>T} v(x,T)^k rho^(t-T) with rho = (5/6)^k.
  for (int k = 1; k <= 3; ++k) {
    const Rational rho = ipow(Q(5, 6), static_cast<unsigned>(k));
    for (std::int64_t x = 1; x <= 6; ++x) {
      Rational partial = 0;
      for (std::int64_t t = 0; t <= T; ++t)
        partial += ipow(v[x][t], static_cast<unsigned>(k));
      const Rational remainder =
          ipow(v[x][T], static_cast<unsigned>(k)) * rho / (Q(1) - rho);
      CHECK(expected_visit_time(M, x, k) == partial + remainder);
    }
  }
}

TEST_CASE("coordinated baseline: interleaved expected times and theta") {
  const auto M = build_matrix<Rational>(
      build_schedule(StrategyId::PartitionCoordinated, uni(4, 2)));
  CHECK(expected_visit_time(M, 1, 2) == Q(1));
  CHECK(expected_visit_time(M, 2, 2) == Q(1));
  CHECK(expected_visit_time(M, 3, 2) == Q(2));
  CHECK(expected_visit_time(M, 4, 2) == Q(2));
  const auto r = theta(M, 2, Placement::uniform_boxes());
  CHECK(*r.theta_exact == "2/3");
  CHECK(*r.speedup_mean_exact == "13/8");

  const auto M5 = build_matrix<Rational>(
      build_schedule(StrategyId::PartitionCoordinated, uni(5, 2)));
  const auto r5 = theta(M5, 2, Placement::uniform_boxes());
  CHECK(*r5.theta_exact == "49/75");
}

TEST_CASE("per-step column budgets hold for every strategy") {
  for (const StrategyId s :
       {StrategyId::Trivial, StrategyId::StocAdversarial,
        StrategyId::OptUniform, StrategyId::Memoryless,
        StrategyId::PartitionCoordinated}) {
    for (const int k : {2, 3}) {
      const auto M = build_matrix<Rational>(
          build_schedule(s, uni(12, k)));
      const auto viol = column_requirement_check(M);
      CHECK_FALSE(viol.has_value());
    }
  }
}

TEST_CASE("column budget violations are detected") {
  // Hand-built over-eager schedule: one step that opens 4/3 boxes in
  // expectation (factor 1/3 on both boxes).
  NonVisitMatrixQ M;
  M.strategy = StrategyId::OptUniform;
  M.m = 2;
  M.schedule_k = 1;
  M.horizon = 1;
  M.range_end = {0, 2};
  M.factor = {Q(1), Q(1, 3)};
  const auto viol = column_requirement_check(M);
  REQUIRE(viol.has_value());
  CHECK(viol->t == 1);
  CHECK(viol->column_sum == doctest::Approx(4.0 / 3.0));
  CHECK(viol->allowed == doctest::Approx(1.0));
}

TEST_CASE("a single searcher is never faster than the one-box-per-step pace") {
  for (const StrategyId s :
       {StrategyId::Trivial, StrategyId::StocAdversarial,
        StrategyId::OptUniform, StrategyId::Memoryless,
        StrategyId::PartitionCoordinated}) {
    const auto M = build_matrix<Rational>(build_schedule(s, uni(12, 1)));
    const auto r = theta(M, 1, Placement::uniform_boxes());
    REQUIRE(r.theta_exact.has_value());
    const Rational th(*r.theta_exact);
    CHECK(th >= 1);
    if (s == StrategyId::Trivial || s == StrategyId::PartitionCoordinated)
      CHECK(th == 1);
  }
}

TEST_CASE("rational engine size guard") {
  CHECK_THROWS_AS(build_matrix<Rational>(
                      build_schedule(StrategyId::OptUniform, uni(513, 2))),
                  std::domain_error);
  BuildOptions opts;
  opts.rational_m_limit = 1000;
  const auto M = build_matrix<Rational>(
      build_schedule(StrategyId::Trivial, uni(1000, 1)), opts);
  const auto r = theta(M, 1, Placement::uniform_boxes());
  CHECK(*r.theta_exact == "1");
}

TEST_CASE("rational and float engines agree to 1e-10") {
  for (const StrategyId s : {StrategyId::OptUniform,
                             StrategyId::StocAdversarial,
                             StrategyId::Memoryless}) {
    for (const int k : {2, 3}) {
      const auto schedQ = build_schedule(s, uni(30, k));
      const auto rq =
          theta(build_matrix<Rational>(schedQ), k, Placement::uniform_boxes());
      const auto rd =
          theta(build_matrix<double>(schedQ), k, Placement::uniform_boxes());
      CHECK(rd.theta == doctest::Approx(rq.theta).epsilon(1e-10));
      CHECK(rd.speedup_inv_theta ==
            doctest::Approx(rq.speedup_inv_theta).epsilon(1e-10));
      CHECK(*rd.speedup_mean ==
            doctest::Approx(*rq.speedup_mean).epsilon(1e-10));
    }
  }
}

TEST_CASE("fixed placement equals the per-box statistic") {
  const auto M = build_matrix<Rational>(
      build_schedule(StrategyId::OptUniform, uni(6, 2)));
  ThetaOptions opts;
  opts.per_x = true;
  const auto uniform = theta(M, 2, Placement::uniform_boxes(), opts);
  REQUIRE(uniform.per_x.has_value());
  REQUIRE(uniform.per_x->size() == 6);
  for (std::int64_t x = 1; x <= 6; ++x) {
    const auto fixed = theta(M, 2, Placement::fixed(x));
    const auto& p = (*uniform.per_x)[static_cast<std::size_t>(x - 1)];
    CHECK(p.x == x);
    CHECK(fixed.theta == doctest::Approx(p.theta_x));
    CHECK(p.expected_time ==
          doctest::Approx(to_double(expected_visit_time(M, x, 2))));
  }
}

TEST_CASE("phase strategies round the box count up to a multiple of k") {
  const auto M = build_matrix<Rational>(
      build_schedule(StrategyId::OptUniform, uni(5, 2)));
  CHECK(M.m == 6);
  const auto r = theta(M, 2, Placement::uniform_boxes());
  CHECK(r.m == 6);
  CHECK(*r.theta_exact == "947/1080");
}

TEST_CASE("reference bounds are attached per strategy") {
  const auto check = [](StrategyId s, int k, double bound,
                        const std::string& kind) {
    const auto M = build_matrix<double>(build_schedule(s, uni(24, k)));
    auto r = theta(M, k, Placement::uniform_boxes());
    attach_bound(r);
    REQUIRE(r.bound.has_value());
    CHECK(*r.bound == doctest::Approx(bound));
    CHECK(*r.bound_kind == kind);
    CHECK(*r.ratio == doctest::Approx(r.speedup_inv_theta / bound));
  };
  check(StrategyId::Trivial, 2, 1.0, "exact_optimum");
  check(StrategyId::OptUniform, 2, 1.2, "exact_optimum");
  check(StrategyId::OptUniform, 3, 1.5, "exact_optimum");
  check(StrategyId::StocAdversarial, 2, 9.0 / 8.0, "exact_optimum");
  check(StrategyId::Memoryless, 2, 2.0 / 3.0, "asymptotic_lower_bound");
  check(StrategyId::PartitionCoordinated, 3, 3.0, "exact_optimum");
}

TEST_CASE("matrix index guards") {
  const auto M = build_matrix<Rational>(
      build_schedule(StrategyId::OptUniform, uni(6, 2)));
  CHECK_THROWS_AS(M.entry(0, 1), std::out_of_range);
  CHECK_THROWS_AS(M.entry(7, 1), std::out_of_range);
  CHECK_THROWS_AS(M.entry(1, -1), std::out_of_range);
}
