#include "mcliff/spectral.hpp"

#include <numeric>

namespace mcliff {

Multivector SpectralDecomposition::eigenvector(int k) const {
  return Multivector::from_vector(dim(), eigenvectors.at(k));
}

namespace {

double off_diag_frobenius(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

}  // namespace

SpectralDecomposition eigen_sym(const LinearExtensor& s) {
  const int n = s.dim();
  double asym = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      asym = std::max(asym, std::abs(s(i, j) - s(j, i)));
  if (asym > 1e-10 * std::max(1.0, norm_inf(s)))
    throw not_symmetric("extensor is not symmetric within tolerance");

  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = 0.5 * (s(i, j) + s(j, i));
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double fro = 0.0;
  for (double x : a) fro += x * x;
  fro = std::sqrt(fro);
  const double target = 1e-13 * fro;
  const long max_rotations = 30L * n * n;
  long rotations = 0;

  while (off_diag_frobenius(a, n) > target) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        if (++rotations > max_rotations)
          throw no_convergence("jacobi rotation budget exhausted");
        const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        const double tj = sn / (1.0 + c);
        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i != p && i != q) {
            const double aip = a[i * n + p];
            const double aiq = a[i * n + q];
            a[i * n + p] = aip - sn * (aiq + tj * aip);
            a[i * n + q] = aiq + sn * (aip - tj * aiq);
            a[p * n + i] = a[i * n + p];
            a[q * n + i] = a[i * n + q];
          }
          const double vip = v[i * n + p];
          const double viq = v[i * n + q];
          v[i * n + p] = vip - sn * (viq + tj * vip);
          v[i * n + q] = viq + sn * (vip - tj * viq);
        }
      }
    if (fro == 0.0) break;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int k) {
    const double lam = a[k * n + k];
    // group 0 = positives (descending), group 1 = rest (descending |.|)
    return lam > 0.0 ? std::make_pair(0, -lam) : std::make_pair(1, lam);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return key(x) < key(y); });

  SpectralDecomposition sd;
  sd.eigenvalues.reserve(n);
  sd.eigenvectors.reserve(n);
  for (int idx = 0; idx < n; ++idx) {
    const int k = order[idx];
    const double lam = a[k * n + k];
    std::vector<double> vec(n);
    for (int i = 0; i < n; ++i) vec[i] = v[i * n + k];
    double nrm = 0.0;
    for (double x : vec) nrm += x * x;
    nrm = std::sqrt(nrm);
    int lead = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(vec[i]) > std::abs(vec[lead])) lead = i;
    const double flip = (vec[lead] < 0.0 ? -1.0 : 1.0) / (nrm > 0.0 ? nrm : 1.0);
    for (double& x : vec) x *= flip;
    sd.eigenvalues.push_back(lam);
    sd.eigenvectors.push_back(std::move(vec));
    if (lam > 0.0) ++sd.p;
    if (lam < 0.0) ++sd.q;
  }
  return sd;
}

double degeneracy_threshold(const SpectralDecomposition& sd) {
  double mx = 0.0;
  for (double lam : sd.eigenvalues) mx = std::max(mx, std::abs(lam));
  return std::max(1e-10 * mx, 1e-300);
}

std::pair<int, int> signature(const LinearExtensor& g) {
  const SpectralDecomposition sd = eigen_sym(g);
  const double cutoff = degeneracy_threshold(sd);
  int p = 0, q = 0;
  for (double lam : sd.eigenvalues) {
    if (std::abs(lam) <= cutoff)
      throw degenerate_metric("eigenvalue magnitude at or below threshold");
    lam > 0.0 ? ++p : ++q;
  }
  return {p, q};
}

double det_from_eigen(const SpectralDecomposition& sd) {
  double d = 1.0;
  for (double lam : sd.eigenvalues) d *= lam;
  return d;
}

}  // namespace mcliff
