#pragma once

#include <bit>

#include "mcliff/common.hpp"

namespace mcliff::kernels {

// Sign picked up when sorting the concatenation of two ascending factor
// lists into canonical ascending order: parity of the number of pairs
// (i in a, j in b) with i > j.
inline double merge_sign(blade_mask a, blade_mask b) {
  int swaps = 0;
  for (a >>= 1; a != 0; a >>= 1) swaps += std::popcount(a & b);
  return (swaps & 1) != 0 ? -1.0 : 1.0;
}

// Product of per-direction weights over the set bits of m. A null weight
// array means every direction squares to +1.
inline double blade_weight(blade_mask m, const double* w) {
  if (w == nullptr) return 1.0;
  double acc = 1.0;
  for (; m != 0; m &= m - 1) acc *= w[std::countr_zero(m)];
  return acc;
}

// All kernels write 2^n coefficients to `out`, which must not alias the
// inputs. `diag` holds the square of each basis direction (nullptr for the
// fiducial algebra where all squares are +1); products of a general metric
// are built on top of these via outermorphisms, never passed in here.

// Reference kernels: scatter over input blade pairs, single-threaded.
// Kept as the independent comparison point for the production kernels.
namespace serial {
void wedge(int n, const double* x, const double* y, double* out);
void clifford(int n, const double* x, const double* y, double* out,
              const double* diag);
void left_contract(int n, const double* x, const double* y, double* out,
                   const double* diag);
void right_contract(int n, const double* x, const double* y, double* out,
                    const double* diag);
}  // namespace serial

// Production kernels: one independent gather per output blade, so results
// do not depend on the thread count. OpenMP kicks in at kParallelMinDim.
inline constexpr int kParallelMinDim = 8;

namespace omp {
void wedge(int n, const double* x, const double* y, double* out);
void clifford(int n, const double* x, const double* y, double* out,
              const double* diag);
void left_contract(int n, const double* x, const double* y, double* out,
                   const double* diag);
void right_contract(int n, const double* x, const double* y, double* out,
                    const double* diag);
}  // namespace omp

// Coefficient dot with per-blade weights; cheap enough to stay serial.
double scalar(int n, const double* x, const double* y, const double* diag);

inline void wedge(int n, const double* x, const double* y, double* out) {
  omp::wedge(n, x, y, out);
}
inline void clifford(int n, const double* x, const double* y, double* out,
                     const double* diag) {
  omp::clifford(n, x, y, out, diag);
}
inline void left_contract(int n, const double* x, const double* y, double* out,
                          const double* diag) {
  omp::left_contract(n, x, y, out, diag);
}
inline void right_contract(int n, const double* x, const double* y,
                           double* out, const double* diag) {
  omp::right_contract(n, x, y, out, diag);
}

}  // namespace mcliff::kernels
