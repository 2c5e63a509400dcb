// Timing comparison of the serial and OpenMP residual kernels on a large grid.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "lobdk/helicity.hpp"
#include "lobdk/mode_builder.hpp"

using namespace lobdk;
using clock_type = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto t0 = clock_type::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = 200001;
  int reps = 5;
  if (argc > 1) n = std::strtoull(argv[1], nullptr, 10);
  if (argc > 2) reps = std::atoi(argv[2]);

  const QuantumNumbers q{.epsilon = 5.0, .a = 1.0, .b = 1.0, .mass = 3.0};
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = -2.0 + 4.0 * double(i) / double(n - 1);
  const ModeField mode = build_mode(q, Branch::helicity_plus, +1, grid);

  std::printf("grid points: %zu, reps: %d\n", n, reps);

  const double ts = time_ms([&] { explicit_residuals(mode.q, mode.f, Exec::serial); }, reps);
  const double tp = time_ms([&] { explicit_residuals(mode.q, mode.f, Exec::parallel); }, reps);
  std::printf("wave residuals   serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n", ts, tp,
              ts / tp);

  const double hs =
      time_ms([&] { helicity_residuals(mode.q.sigma, mode.q, mode.f, Exec::serial); }, reps);
  const double hp =
      time_ms([&] { helicity_residuals(mode.q.sigma, mode.q, mode.f, Exec::parallel); }, reps);
  std::printf("helicity residuals serial %6.2f ms   parallel %8.2f ms   speedup %.2fx\n", hs, hp,
              hs / hp);

  // sanity: the two paths must agree bitwise
  const ResidualReport rs = explicit_residuals(mode.q, mode.f, Exec::serial);
  const ResidualReport rp = explicit_residuals(mode.q, mode.f, Exec::parallel);
  std::printf("bitwise agreement: %s\n", rs.max_abs == rp.max_abs ? "yes" : "NO");
  return rs.max_abs == rp.max_abs ? 0 : 1;
}
