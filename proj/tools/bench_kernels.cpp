// Wall-time comparison of the serial reference kernels against the
// OpenMP-parallel drivers, plus a bit-identity check on each result pair.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "boxhunt/continuous.hpp"
#include "boxhunt/exact.hpp"
#include "boxhunt/grid.hpp"
#include "boxhunt/montecarlo.hpp"

using namespace boxhunt;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const char* name, double serial_ms, double parallel_ms,
         bool identical) {
  std::printf("%-28s %10.1f %10.1f %8.2fx  %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms,
              identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("%-28s %10s %10s %9s  %s\n", "kernel", "serial/ms",
              "parallel/ms", "speedup", "result check");

  {
    ProblemInstance inst{20000, 2, Placement::uniform_boxes()};
    const auto M = build_matrix<double>(
        build_schedule(StrategyId::OptUniform, inst));
    ThetaOptions so, po;
    so.exec = Exec::serial;
    po.exec = Exec::parallel;
    auto t0 = std::chrono::steady_clock::now();
    const auto rs = theta(M, 2, inst.placement, so);
    const double sms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto rp = theta(M, 2, inst.placement, po);
    const double pms = ms_since(t0);
    row("exact theta m=20000", sms, pms,
        std::memcmp(&rs.theta, &rp.theta, sizeof(double)) == 0);
  }

  {
    SimConfig cfg;
    cfg.strategy = StrategyId::OptUniform;
    cfg.instance = {1000, 2, Placement::uniform_boxes()};
    cfg.trials = 200000;
    cfg.seed = 7;
    auto t0 = std::chrono::steady_clock::now();
    const auto rs = estimate_theta(cfg, Exec::serial);
    const double sms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto rp = estimate_theta(cfg, Exec::parallel);
    const double pms = ms_since(t0);
    row("mc 2e5 trials m=1000", sms, pms,
        std::memcmp(&rs.theta, &rp.theta, sizeof(double)) == 0);
  }

  {
    auto t0 = std::chrono::steady_clock::now();
    const auto qs = theta_integral_quadrature(6, 1e-12, 1e-7, Exec::serial);
    const double sms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto qp = theta_integral_quadrature(6, 1e-12, 1e-7, Exec::parallel);
    const double pms = ms_since(t0);
    row("quadrature k=6 tol=1e-12", sms, pms,
        std::memcmp(&qs.value, &qp.value, sizeof(double)) == 0);
  }

  {
    const GridFunction f = sample_opt_grid(3);
    auto t0 = std::chrono::steady_clock::now();
    const double ts = theta_of_grid(f, 3, Exec::serial);
    const double sms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    const double tp = theta_of_grid(f, 3, Exec::parallel);
    const double pms = ms_since(t0);
    row("grid theta k=3", sms, pms,
        std::memcmp(&ts, &tp, sizeof(double)) == 0);
  }

  return 0;
}
