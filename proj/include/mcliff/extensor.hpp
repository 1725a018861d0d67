#pragma once

#include <span>
#include <vector>

#include "mcliff/multivector.hpp"

namespace mcliff {

// Linear map V -> V stored as an n x n matrix in the fiducial basis;
// column j is the image of b_{j+1}.
class LinearExtensor {
 public:
  explicit LinearExtensor(int dim);  // zero map
  static LinearExtensor identity(int dim);
  static LinearExtensor diagonal(std::span<const double> entries);
  static LinearExtensor from_row_major(int dim, std::span<const double> m);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return m_[i * dim_ + j]; }
  double& at(int i, int j) { return m_[i * dim_ + j]; }
  std::span<const double> row_major() const { return m_; }
  std::vector<double> column(int j) const;

  std::vector<double> apply(std::span<const double> v) const;
  Multivector apply(const Multivector& v) const;  // requires grade 1

 private:
  int dim_;
  std::vector<double> m_;
};

LinearExtensor operator+(const LinearExtensor& a, const LinearExtensor& b);
LinearExtensor operator-(const LinearExtensor& a, const LinearExtensor& b);
LinearExtensor operator*(const LinearExtensor& a, double s);

LinearExtensor adjoint(const LinearExtensor& t);
LinearExtensor compose(const LinearExtensor& s, const LinearExtensor& t);
LinearExtensor inverse(const LinearExtensor& t);  // throws singular_extensor
LinearExtensor star(const LinearExtensor& t);     // adjoint of the inverse
double determinant(const LinearExtensor& t);      // LU, partial pivoting
// Independent determinant: coefficient of the unit pseudoscalar in the wedge
// of the columns. Kept as the cross-check for the LU path.
double determinant_wedge(const LinearExtensor& t);
double norm_inf(const LinearExtensor& t);  // max |entry|
// Scale-relative singularity cutoff: 1e-12 * max(1, ||t||_inf^n).
double singularity_threshold(const LinearExtensor& t);

// Grade-preserving extension of t applied to one multivector.
Multivector outermorphism(const LinearExtensor& t, const Multivector& x);

// Cached extension: the image of every basis blade, stored sparsely
// (each grade-k image has at most C(n,k) coefficients).
class Outermorphism {
 public:
  explicit Outermorphism(const LinearExtensor& t);
  int dim() const { return dim_; }
  Multivector apply(const Multivector& x) const;
  Multivector column(blade_mask m) const;

 private:
  int dim_;
  std::vector<std::size_t> offsets_;
  std::vector<blade_mask> masks_;
  std::vector<double> coeffs_;
};

// A pair of bases (e_k, e^k), columns of `lower` and `upper`. b-reciprocal
// when e_k . e^l = delta_kl; the metric products instead pair them through
// the metric scalar product.
struct BasisPair {
  LinearExtensor lower;
  LinearExtensor upper;

  static BasisPair fiducial(int n);
  // Any invertible e yields the b-reciprocal partner upper = star(e).
  static BasisPair from_extensor(const LinearExtensor& e);

  int dim() const { return lower.dim(); }
  Multivector lower_vector(int k) const;
  Multivector upper_vector(int k) const;
  double b_reciprocity_residual() const;  // max |e_k . e^l - delta_kl|
};

}  // namespace mcliff
