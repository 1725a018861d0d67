#include "mcliff/kernels.hpp"

namespace mcliff::kernels {

double scalar(int n, const double* x, const double* y, const double* diag) {
  const std::size_t size = std::size_t{1} << n;
  double acc = 0.0;
  for (std::size_t m = 0; m < size; ++m) {
    if (x[m] == 0.0 || y[m] == 0.0) continue;
    acc += x[m] * y[m] * blade_weight(static_cast<blade_mask>(m), diag);
  }
  return acc;
}

namespace serial {

void wedge(int n, const double* x, const double* y, double* out) {
  const blade_mask size = blade_mask{1} << n;
  std::fill(out, out + size, 0.0);
  for (blade_mask a = 0; a < size; ++a) {
    if (x[a] == 0.0) continue;
    for (blade_mask b = 0; b < size; ++b) {
      if ((a & b) != 0 || y[b] == 0.0) continue;
      out[a | b] += merge_sign(a, b) * x[a] * y[b];
    }
  }
}

void clifford(int n, const double* x, const double* y, double* out,
              const double* diag) {
  const blade_mask size = blade_mask{1} << n;
  std::fill(out, out + size, 0.0);
  for (blade_mask a = 0; a < size; ++a) {
    if (x[a] == 0.0) continue;
    for (blade_mask b = 0; b < size; ++b) {
      if (y[b] == 0.0) continue;
      // repeated directions annihilate pairwise against their squares
      out[a ^ b] += merge_sign(a, b) * blade_weight(a & b, diag) * x[a] * y[b];
    }
  }
}

void left_contract(int n, const double* x, const double* y, double* out,
                   const double* diag) {
  const blade_mask size = blade_mask{1} << n;
  std::fill(out, out + size, 0.0);
  for (blade_mask a = 0; a < size; ++a) {
    if (x[a] == 0.0) continue;
    for (blade_mask b = 0; b < size; ++b) {
      if ((a & ~b) != 0 || y[b] == 0.0) continue;  // needs a subset of b
      out[b ^ a] += merge_sign(a, b) * blade_weight(a, diag) * x[a] * y[b];
    }
  }
}

void right_contract(int n, const double* x, const double* y, double* out,
                    const double* diag) {
  const blade_mask size = blade_mask{1} << n;
  std::fill(out, out + size, 0.0);
  for (blade_mask a = 0; a < size; ++a) {
    if (x[a] == 0.0) continue;
    for (blade_mask b = 0; b < size; ++b) {
      if ((b & ~a) != 0 || y[b] == 0.0) continue;  // needs b subset of a
      out[a ^ b] += merge_sign(a, b) * blade_weight(b, diag) * x[a] * y[b];
    }
  }
}

}  // namespace serial
}  // namespace mcliff::kernels
