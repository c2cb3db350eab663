#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "boxhunt/continuous.hpp"
#include "boxhunt/grid.hpp"

using namespace boxhunt;

namespace {

// f(x, t) = max(0, 1 - t) on [0,1]x[0,2]: exactly representable, with
// closed-form column integrals and theta.
GridFunction wedge() {
  GridFunction g;
  g.xs = {0.25, 0.5, 0.75, 1.0};
  g.ts = {0.0, 0.5, 1.0, 1.5, 2.0};
  g.v.resize(g.nx() * g.nt());
  for (std::size_t i = 0; i < g.nx(); ++i)
    for (std::size_t j = 0; j < g.nt(); ++j)
      g.v[i * g.nt() + j] = std::max(0.0, 1.0 - g.ts[j]);
  return g;
}

}  // namespace

TEST_CASE("bilinear evaluation reproduces nodes and interpolates between") {
  const GridFunction g = wedge();
  CHECK(g.eval(0.25, 0.0) == doctest::Approx(1.0));
  CHECK(g.eval(1.0, 0.5) == doctest::Approx(0.5));
  CHECK(g.eval(0.6, 0.25) == doctest::Approx(0.75));
  CHECK(g.eval(0.6, 1.75) == doctest::Approx(0.0));
  CHECK_THROWS_AS(g.eval(0.1, 0.5), std::out_of_range);
  CHECK_THROWS_AS(g.eval(0.5, 2.5), std::out_of_range);
}

TEST_CASE("column integral of one minus the function") {
  const GridFunction g = wedge();
  // 1 - f = t on the whole x-range (width 0.75).
  CHECK(column_integral(g, 0.0) == doctest::Approx(0.0));
  CHECK(column_integral(g, 0.5) == doctest::Approx(0.375));
  CHECK(column_integral(g, 1.0) == doctest::Approx(0.75));
  CHECK(column_integral(g, 2.0) == doctest::Approx(0.75));
}

TEST_CASE("theta of the wedge matches the closed form") {
  // theta = (1/extent) int (1/x) int_0^1 (1-t)^k dt dx
  //       = ln(4) / (0.75 * (k+1)).
  // The t-part is exact; the 1/x weight meets four-point Gauss cells of
  // width 0.25, whose relative error is ~6e-7 here.
  const GridFunction g = wedge();
  for (int k = 1; k <= 4; ++k)
    CHECK(theta_of_grid(g, k) ==
          doctest::Approx(std::log(4.0) / (0.75 * (k + 1))).epsilon(1e-5));
}

TEST_CASE("zoom rescales axes and leaves values untouched") {
  const GridFunction g = wedge();
  const GridFunction z = zoom(g, 2.0, 3.0);
  CHECK(z.xs.front() == doctest::Approx(0.5));
  CHECK(z.xs.back() == doctest::Approx(2.0));
  CHECK(z.ts.back() == doctest::Approx(6.0));
  CHECK(z.v == g.v);
  CHECK(z.eval(1.2, 0.75) == doctest::Approx(g.eval(0.6, 0.25)));
  CHECK_THROWS_AS(zoom(g, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(zoom(g, 1.0, -2.0), std::invalid_argument);
}

TEST_CASE("zoom laws: columns scale by a, theta by b/a") {
  const GridFunction f = sample_opt_grid(2);
  const double a = 3.0, b = 2.0;
  const GridFunction z = zoom(f, a, b);
  for (const double t : {0.1, 0.25, 0.6}) {
    const double c = column_integral(f, t);
    const double cz = column_integral(z, t * b);
    CHECK(cz == doctest::Approx(a * c).epsilon(1e-12));
  }
  const double th = theta_of_grid(f, 2);
  const double thz = theta_of_grid(z, 2);
  CHECK(thz == doctest::Approx(th * b / a).epsilon(1e-12));
  // Equal scaling of both axes leaves theta unchanged.
  const GridFunction zs = zoom(f, 5.0, 5.0);
  CHECK(theta_of_grid(zs, 2) == doctest::Approx(th).epsilon(1e-12));
}

TEST_CASE("theta of the grid is driver-independent") {
  const GridFunction f = sample_opt_grid(3);
  const double ser = theta_of_grid(f, 3, Exec::serial);
  const double par = theta_of_grid(f, 3, Exec::parallel);
  CHECK(std::memcmp(&ser, &par, sizeof(double)) == 0);
}

TEST_CASE("embedded matrices: all-ones columns integrate to zero") {
  // Before any box is opened (t < 1) the non-visit function is 1 everywhere,
  // so the opened-mass column integral vanishes (up to the ramp slivers).
  const auto M = build_matrix<double>(build_schedule(
      StrategyId::OptUniform, {6, 2, Placement::uniform_boxes()}));
  const EmbeddedMatrix em = embed_matrix(M);
  CHECK(em.truncation_error == 0.0);
  CHECK(column_integral(em.grid, 0.0) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(column_integral(em.grid, 0.5) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-5));
}

TEST_CASE("embedded matrices: opened mass never exceeds the step budget") {
  const auto M = build_matrix<double>(build_schedule(
      StrategyId::OptUniform, {20, 2, Placement::uniform_boxes()}));
  const EmbeddedMatrix em = embed_matrix(M);
  for (std::int64_t t = 1; t <= M.horizon; ++t) {
    const double opened = column_integral(em.grid, static_cast<double>(t));
    CHECK(opened <= static_cast<double>(t) + 1e-6);
  }
}

TEST_CASE("embedded memoryless matrices truncate with a certified error") {
  const auto M = build_matrix<double>(build_schedule(
      StrategyId::Memoryless, {6, 2, Placement::uniform_boxes()}));
  const EmbeddedMatrix em = embed_matrix(M, 1e-6, 1e-9);
  CHECK(em.truncation_error > 0.0);
  CHECK(em.truncation_error < 1e-7);
  // The grid extends far enough that the final column is essentially zero.
  const double last = em.grid.ts.back();
  CHECK(em.grid.eval(3.0, last - 0.5) <= 1e-8);
}

TEST_CASE("embedded trivial matrix reproduces its slab expected times") {
  // Single searcher, boxes opened at steps 1, 2, 3: the t-integral of the
  // embedded row at box x is x (up to ramp slivers), and theta over the
  // continuous 1/x weight is sum ln((x+1)/x) * x / m.
  const auto M = build_matrix<double>(build_schedule(
      StrategyId::Trivial, {3, 1, Placement::uniform_boxes()}));
  const EmbeddedMatrix em = embed_matrix(M);
  const double want = (std::log(2.0) * 1 + std::log(1.5) * 2 +
                       std::log(4.0 / 3.0) * 3) /
                      3.0;
  CHECK(theta_of_grid(em.grid, 1) == doctest::Approx(want).epsilon(1e-4));
  CHECK(theta_of_grid(em.grid, 1) <= 1.0);
}
