#include "mcliff/multivector.hpp"

#include <bit>

#include "mcliff/kernels.hpp"

namespace mcliff {

namespace {

void require_same_dim(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim())
    throw dimension_error("multivector dimensions differ: " +
                          std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
}

int grade_of(blade_mask m) { return std::popcount(m); }

}  // namespace

Multivector::Multivector(int dim) : dim_(dim) {
  require_dim(dim);
  c_.assign(std::size_t{1} << dim, 0.0);
}

Multivector Multivector::scalar(int dim, double value) {
  Multivector x(dim);
  x.c_[0] = value;
  return x;
}

Multivector Multivector::blade(int dim, blade_mask mask, double coeff) {
  Multivector x(dim);
  if (mask >= x.size())
    throw dimension_error("blade mask out of range for dimension " +
                          std::to_string(dim));
  x.c_[mask] = coeff;
  return x;
}

Multivector Multivector::from_vector(int dim,
                                     std::span<const double> components) {
  if (static_cast<int>(components.size()) != dim)
    throw dimension_error("vector component count does not match dimension");
  Multivector x(dim);
  for (int i = 0; i < dim; ++i) x.c_[blade_mask{1} << i] = components[i];
  return x;
}

double Multivector::norm_inf() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

bool Multivector::is_zero() const {
  for (double v : c_)
    if (v != 0.0) return false;
  return true;
}

bool Multivector::is_homogeneous(int k) const {
  for (blade_mask m = 0; m < size(); ++m)
    if (c_[m] != 0.0 && grade_of(m) != k) return false;
  return true;
}

std::vector<double> Multivector::vector_components() const {
  if (!is_homogeneous(1))
    throw dimension_error("grade-1 multivector required");
  std::vector<double> v(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = c_[blade_mask{1} << i];
  return v;
}

Multivector Multivector::grade(int k) const { return grade_project(*this, k); }

Multivector Multivector::hat() const { return involution(*this, Involution::hat); }

Multivector Multivector::tilde() const {
  return involution(*this, Involution::tilde);
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same_dim(*this, o);
  for (blade_mask m = 0; m < size(); ++m) c_[m] += o.c_[m];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same_dim(*this, o);
  for (blade_mask m = 0; m < size(); ++m) c_[m] -= o.c_[m];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator*(Multivector a, double s) { return a *= s; }
Multivector operator*(double s, Multivector a) { return a *= s; }
Multivector operator-(Multivector a) { return a *= -1.0; }

bool operator==(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) return false;
  for (blade_mask m = 0; m < a.size(); ++m)
    if (a[m] != b[m]) return false;
  return true;
}

namespace {

const double* diag_ptr(std::span<const double> diag, int n) {
  if (diag.empty()) return nullptr;
  if (static_cast<int>(diag.size()) != n)
    throw dimension_error("diagonal weight count does not match dimension");
  return diag.data();
}

}  // namespace

Multivector wedge(const Multivector& x, const Multivector& y) {
  require_same_dim(x, y);
  Multivector out(x.dim());
  kernels::wedge(x.dim(), x.data(), y.data(), out.data());
  return out;
}

double b_scalar(const Multivector& x, const Multivector& y) {
  require_same_dim(x, y);
  return kernels::scalar(x.dim(), x.data(), y.data(), nullptr);
}

Multivector left_contract(const Multivector& x, const Multivector& y) {
  require_same_dim(x, y);
  Multivector out(x.dim());
  kernels::left_contract(x.dim(), x.data(), y.data(), out.data(), nullptr);
  return out;
}

Multivector right_contract(const Multivector& x, const Multivector& y) {
  require_same_dim(x, y);
  Multivector out(x.dim());
  kernels::right_contract(x.dim(), x.data(), y.data(), out.data(), nullptr);
  return out;
}

Multivector clifford_b(const Multivector& x, const Multivector& y) {
  require_same_dim(x, y);
  Multivector out(x.dim());
  kernels::clifford(x.dim(), x.data(), y.data(), out.data(), nullptr);
  return out;
}

double diag_scalar(const Multivector& x, const Multivector& y,
                   std::span<const double> diag) {
  require_same_dim(x, y);
  return kernels::scalar(x.dim(), x.data(), y.data(), diag_ptr(diag, x.dim()));
}

Multivector diag_left_contract(const Multivector& x, const Multivector& y,
                               std::span<const double> diag) {
  require_same_dim(x, y);
  Multivector out(x.dim());
  kernels::left_contract(x.dim(), x.data(), y.data(), out.data(),
                         diag_ptr(diag, x.dim()));
  return out;
}

Multivector diag_right_contract(const Multivector& x, const Multivector& y,
                                std::span<const double> diag) {
  require_same_dim(x, y);
  Multivector out(x.dim());
  kernels::right_contract(x.dim(), x.data(), y.data(), out.data(),
                          diag_ptr(diag, x.dim()));
  return out;
}

Multivector diag_clifford(const Multivector& x, const Multivector& y,
                          std::span<const double> diag) {
  require_same_dim(x, y);
  Multivector out(x.dim());
  kernels::clifford(x.dim(), x.data(), y.data(), out.data(),
                    diag_ptr(diag, x.dim()));
  return out;
}

Multivector diag_extend(const Multivector& x, std::span<const double> diag) {
  const double* w = diag_ptr(diag, x.dim());
  Multivector out = x;
  for (blade_mask m = 0; m < x.size(); ++m)
    out[m] = x[m] * kernels::blade_weight(m, w);
  return out;
}

Multivector grade_project(const Multivector& x, int k) {
  if (k < 0 || k > x.dim())
    throw dimension_error("grade out of range: " + std::to_string(k));
  Multivector out(x.dim());
  for (blade_mask m = 0; m < x.size(); ++m)
    if (grade_of(m) == k) out[m] = x[m];
  return out;
}

Multivector involution(const Multivector& x, Involution kind) {
  Multivector out(x.dim());
  for (blade_mask m = 0; m < x.size(); ++m) {
    const int k = grade_of(m);
    const bool flip = kind == Involution::hat ? (k & 1) != 0
                                              : (k % 4 == 2 || k % 4 == 3);
    out[m] = flip ? -x[m] : x[m];
  }
  return out;
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return rel_residual(a, b) <= tol;
}

double rel_residual(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim())
    throw dimension_error("multivector dimensions differ");
  double diff = 0.0;
  for (blade_mask m = 0; m < a.size(); ++m)
    diff = std::max(diff, std::abs(a[m] - b[m]));
  return diff / std::max({1.0, a.norm_inf(), b.norm_inf()});
}

double rel_residual(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace mcliff
