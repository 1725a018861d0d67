#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcliff {

// A basis blade is a bitmask over directions: bit i set means b_{i+1} is a
// factor, canonical orientation is ascending index order.
using blade_mask = std::uint32_t;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class dimension_error : public error {
 public:
  using error::error;
};

class singular_extensor : public error {
 public:
  using error::error;
};

class not_symmetric : public error {
 public:
  using error::error;
};

class no_convergence : public error {
 public:
  using error::error;
};

class degenerate_metric : public error {
 public:
  using error::error;
};

class not_eta_orthogonal : public error {
 public:
  using error::error;
};

class not_orthogonal : public error {
 public:
  using error::error;
};

class zero_rho : public error {
 public:
  using error::error;
};

class invalid_basis : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

// Dimension cap: 12 by default, overridable via MC_MAX_DIM up to a hard
// ceiling of 16 (dense storage is 2^n coefficients).
inline constexpr int kHardDimCeiling = 16;
int max_dim();
void require_dim(int n);

}  // namespace mcliff
