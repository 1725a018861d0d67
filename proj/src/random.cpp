#include "mcliff/random.hpp"

namespace mcliff::rnd {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 over the combined value
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::uniform_int(int lo, int hi) {
  const int span = hi - lo + 1;
  const int v = lo + static_cast<int>(uniform() * span);
  return std::min(v, hi);
}

Multivector random_multivector(Rng& r, int n, double amplitude) {
  Multivector x(n);
  for (blade_mask m = 0; m < x.size(); ++m)
    x[m] = r.uniform(-amplitude, amplitude);
  return x;
}

Multivector random_homogeneous(Rng& r, int n, int k, double amplitude) {
  return grade_project(random_multivector(r, n, amplitude), k);
}

Multivector random_vector(Rng& r, int n, double amplitude) {
  return random_homogeneous(r, n, 1, amplitude);
}

namespace {

// right-multiply by the rotation with angle theta in the (i, j) plane
void apply_givens(LinearExtensor& m, int i, int j, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (int k = 0; k < m.dim(); ++k) {
    const double a = m(k, i);
    const double b = m(k, j);
    m.at(k, i) = c * a - s * b;
    m.at(k, j) = s * a + c * b;
  }
}

// right-multiply by the boost with rapidity r in the (i, j) plane
void apply_boost(LinearExtensor& m, int i, int j, double rap) {
  const double ch = std::cosh(rap);
  const double sh = std::sinh(rap);
  for (int k = 0; k < m.dim(); ++k) {
    const double a = m(k, i);
    const double b = m(k, j);
    m.at(k, i) = ch * a + sh * b;
    m.at(k, j) = sh * a + ch * b;
  }
}

}  // namespace

LinearExtensor random_orthogonal(Rng& r, int n) {
  LinearExtensor m = LinearExtensor::identity(n);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n; ++j)
      apply_givens(m, i, j, r.uniform(0.0, 6.283185307179586));
  if (n >= 1 && r.uniform() < 0.5)  // cover both orientation classes
    for (int k = 0; k < n; ++k) m.at(k, 0) = -m(k, 0);
  return m;
}

LinearExtensor random_invertible(Rng& r, int n, double smin, double smax) {
  const LinearExtensor q1 = random_orthogonal(r, n);
  const LinearExtensor q2 = random_orthogonal(r, n);
  std::vector<double> d(n);
  for (double& v : d) {
    v = r.uniform(smin, smax);
    if (r.uniform() < 0.5) v = -v;
  }
  return compose(q1, compose(LinearExtensor::diagonal(d), q2));
}

LinearExtensor random_symmetric(Rng& r, int n, double amplitude) {
  LinearExtensor m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double v = r.uniform(-amplitude, amplitude);
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

LinearExtensor random_metric_matrix(Rng& r, int n, int p, int q,
                                    double min_mag, double max_mag) {
  if (p < 0 || q < 0 || p + q != n)
    throw dimension_error("signature does not fill the dimension");
  const LinearExtensor qm = random_orthogonal(r, n);
  std::vector<double> lam(n);
  for (int i = 0; i < n; ++i) {
    const double mag = r.uniform(min_mag, max_mag);
    lam[i] = i < p ? mag : -mag;
  }
  return compose(adjoint(qm), compose(LinearExtensor::diagonal(lam), qm));
}

LinearExtensor random_eta_orthogonal(Rng& r, int n, int p, int q,
                                     double max_rapidity) {
  if (p < 0 || q < 0 || p + q != n)
    throw dimension_error("signature does not fill the dimension");
  LinearExtensor m = LinearExtensor::identity(n);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool cross = i < p && j >= p;
      if (cross)
        apply_boost(m, i, j, r.uniform(-max_rapidity, max_rapidity));
      else
        apply_givens(m, i, j, r.uniform(0.0, 6.283185307179586));
    }
  return m;
}

}  // namespace mcliff::rnd
