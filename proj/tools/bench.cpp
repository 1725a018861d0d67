// Times the serial reference kernels against the gather kernels that run the
// production path, and checks that both agree on the same inputs.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mcliff/common.hpp"
#include "mcliff/kernels.hpp"
#include "mcliff/random.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using Kernel = void (*)(int, const double*, const double*, double*);

double time_ms(Kernel k, int n, const double* x, const double* y, double* out,
               int iters) {
  const auto start = Clock::now();
  for (int i = 0; i < iters; ++i) k(n, x, y, out);
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count() /
         iters;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no openmp)\n");
#endif

  struct Row {
    const char* name;
    Kernel serial;
    Kernel parallel;
  };
  namespace k = mcliff::kernels;
  const Row rows[] = {
      {"clifford",
       [](int n, const double* x, const double* y, double* out) {
         k::serial::clifford(n, x, y, out, nullptr);
       },
       [](int n, const double* x, const double* y, double* out) {
         k::omp::clifford(n, x, y, out, nullptr);
       }},
      {"wedge", k::serial::wedge, k::omp::wedge},
      {"lcontract",
       [](int n, const double* x, const double* y, double* out) {
         k::serial::left_contract(n, x, y, out, nullptr);
       },
       [](int n, const double* x, const double* y, double* out) {
         k::omp::left_contract(n, x, y, out, nullptr);
       }},
  };

  mcliff::rnd::Rng rng(12345);
  for (int n : {8, 10, 12}) {
    if (n > mcliff::max_dim()) continue;
    const std::size_t size = std::size_t{1} << n;
    std::vector<double> x(size);
    std::vector<double> y(size);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
    for (double& v : y) v = rng.uniform(-1.0, 1.0);
    std::vector<double> out_s(size);
    std::vector<double> out_p(size);

    // Enough iterations to dominate timer noise at small n.
    const int iters = n <= 8 ? 200 : (n <= 10 ? 40 : 5);
    std::printf("n=%d (%zu coefficients, %d iterations)\n", n, size, iters);
    for (const Row& row : rows) {
      const double ser = time_ms(row.serial, n, x.data(), y.data(), out_s.data(), iters);
      const double par = time_ms(row.parallel, n, x.data(), y.data(), out_p.data(), iters);
      const double diff = max_abs_diff(out_s, out_p);
      std::printf("  %-10s serial %9.3f ms   parallel %9.3f ms   speedup %5.2fx   max|diff| %.3e\n",
                  row.name, ser, par, par > 0.0 ? ser / par : 0.0, diff);
      if (diff > 1e-10 * size) {
        std::printf("  MISMATCH on %s\n", row.name);
        return 1;
      }
    }
  }
  return 0;
}
