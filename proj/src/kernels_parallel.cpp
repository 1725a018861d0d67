#include "mcliff/kernels.hpp"

// Gather form: out[c] is a complete sum over contributing input pairs, so
// each iteration of the c-loop is independent and the result is identical
// for any thread count.

namespace mcliff::kernels::omp {

void wedge(int n, const double* x, const double* y, double* out) {
  const int size = 1 << n;
#pragma omp parallel for schedule(static) if (n >= kParallelMinDim)
  for (int c = 0; c < size; ++c) {
    const auto cm = static_cast<blade_mask>(c);
    double acc = 0.0;
    blade_mask a = cm;  // descending submask walk, includes cm and 0
    while (true) {
      const blade_mask b = cm ^ a;
      if (x[a] != 0.0 && y[b] != 0.0) acc += merge_sign(a, b) * x[a] * y[b];
      if (a == 0) break;
      a = (a - 1) & cm;
    }
    out[c] = acc;
  }
}

void clifford(int n, const double* x, const double* y, double* out,
              const double* diag) {
  const int size = 1 << n;
#pragma omp parallel for schedule(static) if (n >= kParallelMinDim)
  for (int c = 0; c < size; ++c) {
    const auto cm = static_cast<blade_mask>(c);
    // Two interleaved accumulators hide the add latency; their final order
    // is fixed, so results stay deterministic. size is even for n >= 1.
    double acc0 = 0.0;
    double acc1 = 0.0;
    for (blade_mask a = 0; a < static_cast<blade_mask>(size); a += 2) {
      const double x0 = x[a];
      const double x1 = x[a + 1];
      if (x0 != 0.0) {
        const blade_mask b = a ^ cm;
        if (y[b] != 0.0)
          acc0 += merge_sign(a, b) * blade_weight(a & b, diag) * x0 * y[b];
      }
      if (x1 != 0.0) {
        const blade_mask b = (a + 1) ^ cm;
        if (y[b] != 0.0)
          acc1 += merge_sign(a + 1, b) * blade_weight((a + 1) & b, diag) * x1 * y[b];
      }
    }
    out[c] = acc0 + acc1;
  }
}

void left_contract(int n, const double* x, const double* y, double* out,
                   const double* diag) {
  const int size = 1 << n;
  const auto full = static_cast<blade_mask>(size - 1);
#pragma omp parallel for schedule(static) if (n >= kParallelMinDim)
  for (int c = 0; c < size; ++c) {
    const auto cm = static_cast<blade_mask>(c);
    const blade_mask comp = full ^ cm;
    double acc = 0.0;
    blade_mask a = comp;  // contracted factors live outside the output blade
    while (true) {
      const blade_mask b = a | cm;
      if (x[a] != 0.0 && y[b] != 0.0)
        acc += merge_sign(a, b) * blade_weight(a, diag) * x[a] * y[b];
      if (a == 0) break;
      a = (a - 1) & comp;
    }
    out[c] = acc;
  }
}

void right_contract(int n, const double* x, const double* y, double* out,
                    const double* diag) {
  const int size = 1 << n;
  const auto full = static_cast<blade_mask>(size - 1);
#pragma omp parallel for schedule(static) if (n >= kParallelMinDim)
  for (int c = 0; c < size; ++c) {
    const auto cm = static_cast<blade_mask>(c);
    const blade_mask comp = full ^ cm;
    double acc = 0.0;
    blade_mask b = comp;
    while (true) {
      const blade_mask a = cm | b;
      if (x[a] != 0.0 && y[b] != 0.0)
        acc += merge_sign(a, b) * blade_weight(b, diag) * x[a] * y[b];
      if (b == 0) break;
      b = (b - 1) & comp;
    }
    out[c] = acc;
  }
}

}  // namespace mcliff::kernels::omp
