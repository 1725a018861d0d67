#pragma once

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <utility>
#include <vector>

#include "doctest.h"
#include "mcliff/multivector.hpp"

namespace testsup {

using mcliff::Multivector;
using mcliff::blade_mask;

// Product of two basis blades computed the pedestrian way: concatenate the
// two ascending index lists, bubble-sort with a sign flip per swap, cancel
// equal neighbours against their square. Shares no code with the popcount
// sign used by the library kernels.
inline std::pair<double, blade_mask> sort_blade_product(blade_mask a,
                                                        blade_mask b,
                                                        const double* diag) {
  std::vector<int> idx;
  for (int i = 0; i < 32; ++i)
    if ((a >> i) & 1u) idx.push_back(i);
  for (int i = 0; i < 32; ++i)
    if ((b >> i) & 1u) idx.push_back(i);
  double sign = 1.0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
      if (idx[k] > idx[k + 1]) {
        std::swap(idx[k], idx[k + 1]);
        sign = -sign;
        moved = true;
      }
    }
  }
  std::vector<int> kept;
  for (std::size_t k = 0; k < idx.size();) {
    if (k + 1 < idx.size() && idx[k] == idx[k + 1]) {
      sign *= diag != nullptr ? diag[idx[k]] : 1.0;
      k += 2;
    } else {
      kept.push_back(idx[k++]);
    }
  }
  blade_mask m = 0;
  for (int i : kept) m |= blade_mask{1} << i;
  return {sign, m};
}

inline Multivector oracle_clifford(const Multivector& x, const Multivector& y,
                                   const double* diag = nullptr) {
  Multivector out(x.dim());
  for (blade_mask a = 0; a < x.size(); ++a) {
    if (x[a] == 0.0) continue;
    for (blade_mask b = 0; b < y.size(); ++b) {
      if (y[b] == 0.0) continue;
      const auto [s, m] = sort_blade_product(a, b, diag);
      out[m] += s * x[a] * y[b];
    }
  }
  return out;
}

inline Multivector oracle_wedge(const Multivector& x, const Multivector& y) {
  Multivector out(x.dim());
  for (blade_mask a = 0; a < x.size(); ++a) {
    if (x[a] == 0.0) continue;
    for (blade_mask b = 0; b < y.size(); ++b) {
      if (y[b] == 0.0 || (a & b) != 0) continue;
      const auto [s, m] = sort_blade_product(a, b, nullptr);
      out[m] += s * x[a] * y[b];
    }
  }
  return out;
}

// Contraction oracles solved coefficient-by-coefficient from the duality
// characterizations against the euclidean scalar product:
//   (X lcontract Y) . Z = Y . (tilde(X) wedge Z)
//   (X rcontract Y) . Z = X . (Z wedge tilde(Y))
inline Multivector oracle_left_contract(const Multivector& x,
                                        const Multivector& y) {
  Multivector out(x.dim());
  const Multivector xt = x.tilde();
  for (blade_mask z = 0; z < x.size(); ++z)
    out[z] = b_scalar(y, wedge(xt, Multivector::blade(x.dim(), z)));
  return out;
}

inline Multivector oracle_right_contract(const Multivector& x,
                                         const Multivector& y) {
  Multivector out(x.dim());
  const Multivector yt = y.tilde();
  for (blade_mask z = 0; z < x.size(); ++z)
    out[z] = b_scalar(x, wedge(Multivector::blade(x.dim(), z), yt));
  return out;
}

inline void check_close(const Multivector& a, const Multivector& b,
                        double tol = 1e-9) {
  const double r = mcliff::rel_residual(a, b);
  INFO("rel residual = " << r);
  CHECK(r <= tol);
}

inline void check_close(double a, double b, double tol = 1e-9) {
  const double r = mcliff::rel_residual(a, b);
  INFO("rel residual = " << r << " (" << a << " vs " << b << ")");
  CHECK(r <= tol);
}

}  // namespace testsup
