#pragma once

#include <span>
#include <vector>

#include "mcliff/common.hpp"

namespace mcliff {

// Dense multivector over the 2^n canonical basis blades of an n-dimensional
// space; coefficient of blade m sits at index m.
class Multivector {
 public:
  explicit Multivector(int dim);
  static Multivector scalar(int dim, double value);
  static Multivector blade(int dim, blade_mask mask, double coeff = 1.0);
  static Multivector from_vector(int dim, std::span<const double> components);

  int dim() const { return dim_; }
  blade_mask size() const { return blade_mask{1} << dim_; }
  double operator[](blade_mask m) const { return c_[m]; }
  double& operator[](blade_mask m) { return c_[m]; }
  std::span<const double> coeffs() const { return c_; }
  const double* data() const { return c_.data(); }
  double* data() { return c_.data(); }

  double norm_inf() const;
  bool is_zero() const;
  bool is_homogeneous(int k) const;  // support contained in grade k
  std::vector<double> vector_components() const;  // requires grade 1

  Multivector grade(int k) const;
  Multivector hat() const;    // (-1)^k on grade k
  Multivector tilde() const;  // (-1)^{k(k-1)/2} on grade k

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);

 private:
  int dim_;
  std::vector<double> c_;
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator*(Multivector a, double s);
Multivector operator*(double s, Multivector a);
Multivector operator-(Multivector a);
bool operator==(const Multivector& a, const Multivector& b);  // exact

// Products of the fiducial algebra (every direction squares to +1).
Multivector wedge(const Multivector& x, const Multivector& y);
double b_scalar(const Multivector& x, const Multivector& y);
Multivector left_contract(const Multivector& x, const Multivector& y);
Multivector right_contract(const Multivector& x, const Multivector& y);
Multivector clifford_b(const Multivector& x, const Multivector& y);

// Products of an orthogonal metric whose basis squares are `diag`.
double diag_scalar(const Multivector& x, const Multivector& y,
                   std::span<const double> diag);
Multivector diag_left_contract(const Multivector& x, const Multivector& y,
                               std::span<const double> diag);
Multivector diag_right_contract(const Multivector& x, const Multivector& y,
                                std::span<const double> diag);
Multivector diag_clifford(const Multivector& x, const Multivector& y,
                          std::span<const double> diag);
// Outermorphism of the diagonal map with the given entries: scales the
// coefficient of each blade by the product of entries over its directions.
Multivector diag_extend(const Multivector& x, std::span<const double> diag);

Multivector grade_project(const Multivector& x, int k);

enum class Involution { hat, tilde };
Multivector involution(const Multivector& x, Involution kind);

// ||a-b||_inf <= tol * max(1, ||a||_inf, ||b||_inf)
bool approx_equal(const Multivector& a, const Multivector& b,
                  double tol = 1e-9);
double rel_residual(const Multivector& a, const Multivector& b);
double rel_residual(double a, double b);

}  // namespace mcliff
