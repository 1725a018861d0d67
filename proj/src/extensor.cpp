#include "mcliff/extensor.hpp"

#include <bit>
#include <cstddef>

#include "mcliff/kernels.hpp"

namespace mcliff {

LinearExtensor::LinearExtensor(int dim) : dim_(dim) {
  require_dim(dim);
  m_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
}

LinearExtensor LinearExtensor::identity(int dim) {
  LinearExtensor t(dim);
  for (int i = 0; i < dim; ++i) t.at(i, i) = 1.0;
  return t;
}

LinearExtensor LinearExtensor::diagonal(std::span<const double> entries) {
  LinearExtensor t(static_cast<int>(entries.size()));
  for (int i = 0; i < t.dim(); ++i) t.at(i, i) = entries[i];
  return t;
}

LinearExtensor LinearExtensor::from_row_major(int dim,
                                              std::span<const double> m) {
  LinearExtensor t(dim);
  if (m.size() != static_cast<std::size_t>(dim) * dim)
    throw dimension_error("matrix entry count does not match dimension");
  std::copy(m.begin(), m.end(), t.m_.begin());
  return t;
}

std::vector<double> LinearExtensor::column(int j) const {
  std::vector<double> v(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<double> LinearExtensor::apply(std::span<const double> v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw dimension_error("vector length does not match extensor dimension");
  std::vector<double> w(dim_, 0.0);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) w[i] += (*this)(i, j) * v[j];
  return w;
}

Multivector LinearExtensor::apply(const Multivector& v) const {
  if (v.dim() != dim_)
    throw dimension_error("multivector dimension does not match extensor");
  return Multivector::from_vector(dim_, apply(v.vector_components()));
}

LinearExtensor operator+(const LinearExtensor& a, const LinearExtensor& b) {
  if (a.dim() != b.dim()) throw dimension_error("extensor dimensions differ");
  LinearExtensor r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a(i, j) + b(i, j);
  return r;
}

LinearExtensor operator-(const LinearExtensor& a, const LinearExtensor& b) {
  if (a.dim() != b.dim()) throw dimension_error("extensor dimensions differ");
  LinearExtensor r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a(i, j) - b(i, j);
  return r;
}

LinearExtensor operator*(const LinearExtensor& a, double s) {
  LinearExtensor r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a(i, j) * s;
  return r;
}

LinearExtensor adjoint(const LinearExtensor& t) {
  LinearExtensor r(t.dim());
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) r.at(i, j) = t(j, i);
  return r;
}

LinearExtensor compose(const LinearExtensor& s, const LinearExtensor& t) {
  if (s.dim() != t.dim()) throw dimension_error("extensor dimensions differ");
  const int n = s.dim();
  LinearExtensor r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double sik = s(i, k);
      if (sik == 0.0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += sik * t(k, j);
    }
  return r;
}

double determinant(const LinearExtensor& t) {
  const int n = t.dim();
  std::vector<double> a(t.row_major().begin(), t.row_major().end());
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      if (f == 0.0) continue;
      for (int k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

double determinant_wedge(const LinearExtensor& t) {
  const int n = t.dim();
  Multivector acc = Multivector::scalar(n, 1.0);
  for (int j = 0; j < n; ++j)
    acc = wedge(acc, Multivector::from_vector(n, t.column(j)));
  return acc[(blade_mask{1} << n) - 1];
}

double norm_inf(const LinearExtensor& t) {
  double m = 0.0;
  for (double v : t.row_major()) m = std::max(m, std::abs(v));
  return m;
}

double singularity_threshold(const LinearExtensor& t) {
  return 1e-12 * std::max(1.0, std::pow(norm_inf(t), t.dim()));
}

LinearExtensor inverse(const LinearExtensor& t) {
  const double det = determinant(t);
  if (std::abs(det) <= singularity_threshold(t))
    throw singular_extensor("extensor determinant below singularity threshold");
  const int n = t.dim();
  std::vector<double> a(t.row_major().begin(), t.row_major().end());
  LinearExtensor inv = LinearExtensor::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    for (int k = 0; k < n; ++k) {
      std::swap(a[c * n + k], a[piv * n + k]);
      std::swap(inv.at(c, k), inv.at(piv, k));
    }
    const double d = a[c * n + c];
    for (int k = 0; k < n; ++k) {
      a[c * n + k] /= d;
      inv.at(c, k) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r * n + c];
      if (f == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        a[r * n + k] -= f * a[c * n + k];
        inv.at(r, k) -= f * inv.at(c, k);
      }
    }
  }
  return inv;
}

LinearExtensor star(const LinearExtensor& t) { return adjoint(inverse(t)); }

namespace {

using SparseCol = std::vector<std::pair<blade_mask, double>>;

// Images of basis blades under the extension of t, ascending mask order,
// restricted to flagged masks (null = all). Uses the factorization
// image(m) = t(b_low) ^ image(m without its lowest direction).
std::vector<SparseCol> extension_columns(const LinearExtensor& t,
                                         const std::vector<char>* needed) {
  const int n = t.dim();
  const blade_mask size = blade_mask{1} << n;
  std::vector<SparseCol> cols(size);
  cols[0] = {{0, 1.0}};
  std::vector<double> acc(size, 0.0);
  std::vector<char> used(size, 0);
  std::vector<blade_mask> touched;
  for (blade_mask m = 1; m < size; ++m) {
    if (needed != nullptr && !(*needed)[m]) continue;
    const int i = std::countr_zero(m);
    const blade_mask rest = m & (m - 1);
    const std::vector<double> v = t.column(i);
    touched.clear();
    for (const auto& [bm, bc] : cols[rest]) {
      for (int j = 0; j < n; ++j) {
        if (v[j] == 0.0) continue;
        const blade_mask jb = blade_mask{1} << j;
        if ((bm & jb) != 0) continue;
        const blade_mask om = bm | jb;
        if (!used[om]) {
          used[om] = 1;
          touched.push_back(om);
        }
        acc[om] += kernels::merge_sign(jb, bm) * v[j] * bc;
      }
    }
    std::sort(touched.begin(), touched.end());
    SparseCol& col = cols[m];
    col.reserve(touched.size());
    for (blade_mask om : touched) {
      if (acc[om] != 0.0) col.emplace_back(om, acc[om]);
      acc[om] = 0.0;
      used[om] = 0;
    }
  }
  return cols;
}

}  // namespace

Multivector outermorphism(const LinearExtensor& t, const Multivector& x) {
  if (t.dim() != x.dim())
    throw dimension_error("extensor and multivector dimensions differ");
  const blade_mask size = x.size();
  std::vector<char> needed(size, 0);
  needed[0] = 1;
  for (blade_mask m = 0; m < size; ++m) {
    if (x[m] == 0.0) continue;
    needed[m] = 1;
    for (blade_mask c = m; c != 0; c &= c - 1) needed[c] = 1;
  }
  const auto cols = extension_columns(t, &needed);
  Multivector out(x.dim());
  for (blade_mask m = 0; m < size; ++m) {
    if (x[m] == 0.0) continue;
    for (const auto& [om, oc] : cols[m]) out[om] += x[m] * oc;
  }
  return out;
}

Outermorphism::Outermorphism(const LinearExtensor& t) : dim_(t.dim()) {
  const auto cols = extension_columns(t, nullptr);
  offsets_.assign(cols.size() + 1, 0);
  std::size_t total = 0;
  for (std::size_t m = 0; m < cols.size(); ++m) {
    total += cols[m].size();
    offsets_[m + 1] = total;
  }
  masks_.reserve(total);
  coeffs_.reserve(total);
  for (const SparseCol& col : cols)
    for (const auto& [om, oc] : col) {
      masks_.push_back(om);
      coeffs_.push_back(oc);
    }
}

Multivector Outermorphism::apply(const Multivector& x) const {
  if (x.dim() != dim_)
    throw dimension_error("extension and multivector dimensions differ");
  Multivector out(dim_);
  for (blade_mask m = 0; m < x.size(); ++m) {
    const double xm = x[m];
    if (xm == 0.0) continue;
    for (std::size_t k = offsets_[m]; k < offsets_[m + 1]; ++k)
      out[masks_[k]] += xm * coeffs_[k];
  }
  return out;
}

Multivector Outermorphism::column(blade_mask m) const {
  Multivector out(dim_);
  if (m >= out.size()) throw dimension_error("blade mask out of range");
  for (std::size_t k = offsets_[m]; k < offsets_[m + 1]; ++k)
    out[masks_[k]] = coeffs_[k];
  return out;
}

BasisPair BasisPair::fiducial(int n) {
  return {LinearExtensor::identity(n), LinearExtensor::identity(n)};
}

BasisPair BasisPair::from_extensor(const LinearExtensor& e) {
  return {e, star(e)};
}

Multivector BasisPair::lower_vector(int k) const {
  return Multivector::from_vector(dim(), lower.column(k));
}

Multivector BasisPair::upper_vector(int k) const {
  return Multivector::from_vector(dim(), upper.column(k));
}

double BasisPair::b_reciprocity_residual() const {
  const int n = dim();
  double worst = 0.0;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += lower(i, k) * upper(i, l);
      worst = std::max(worst, std::abs(dot - (k == l ? 1.0 : 0.0)));
    }
  return worst;
}

}  // namespace mcliff
