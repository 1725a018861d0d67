#include "mcliff/gauge.hpp"

#include <numeric>

#include "mcliff/metric.hpp"

namespace mcliff {

std::vector<double> GaugeFactorization::eta_diag() const {
  return eta_signs(dim(), p, q);
}

LinearExtensor fiducial_eta(int n, int p, int q) {
  return LinearExtensor::diagonal(eta_signs(n, p, q));
}

std::vector<double> eta_signs(int n, int p, int q) {
  if (p < 0 || q < 0 || p + q != n)
    throw dimension_error("signature does not fill the dimension");
  std::vector<double> d(n, 1.0);
  for (int i = p; i < n; ++i) d[i] = -1.0;
  return d;
}

GaugeFactorization factor_from_spectral(const SpectralDecomposition& sd) {
  const int n = sd.dim();
  const double cutoff = degeneracy_threshold(sd);
  for (double lam : sd.eigenvalues)
    if (std::abs(lam) <= cutoff)
      throw degenerate_metric("eigenvalue magnitude at or below threshold");

  // Consume eigenpairs positives-first, each sign block ascending by
  // magnitude, so already-diagonal metrics yield diagonal h.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const double lx = sd.eigenvalues[x];
    const double ly = sd.eigenvalues[y];
    if ((lx > 0.0) != (ly > 0.0)) return lx > 0.0;
    return std::abs(lx) < std::abs(ly);
  });

  GaugeFactorization f{LinearExtensor(n), LinearExtensor(n), 0, 0};
  for (int k = 0; k < n; ++k) {
    const double lam = sd.eigenvalues[order[k]];
    const std::vector<double>& vec = sd.eigenvectors[order[k]];
    const double s = std::sqrt(std::abs(lam));
    // h maps the eigenvector to s * b_{k+1}: row k of h is s * vec^T
    for (int j = 0; j < n; ++j) f.h.at(k, j) = s * vec[j];
    lam > 0.0 ? ++f.p : ++f.q;
  }
  f.eta = fiducial_eta(n, f.p, f.q);
  return f;
}

GaugeFactorization gauge_from_metric(const MetricExtensor& g) {
  return g.gauge();
}

bool is_eta_orthogonal(const LinearExtensor& l, const LinearExtensor& eta,
                       double tol) {
  const LinearExtensor pulled = compose(adjoint(l), compose(eta, l));
  return norm_inf(pulled - eta) <= tol * std::max(1.0, norm_inf(eta));
}

GaugeFactorization compose_gauge(const LinearExtensor& l,
                                 const GaugeFactorization& f, double tol) {
  if (l.dim() != f.dim()) throw dimension_error("extensor dimensions differ");
  if (!is_eta_orthogonal(l, f.eta, tol))
    throw not_eta_orthogonal("gauge change is not eta-orthogonal");
  return {compose(l, f.h), f.eta, f.p, f.q};
}

BasisPair gauge_bases(const GaugeFactorization& f, const BasisPair& e) {
  if (f.dim() != e.dim()) throw dimension_error("extensor dimensions differ");
  return {compose(f.h, e.lower), compose(star(f.h), e.upper)};
}

MetricExtensor metric_from_rho_l(std::span<const double> rho,
                                 const LinearExtensor& l, int p, int q) {
  const int n = l.dim();
  if (static_cast<int>(rho.size()) != n)
    throw dimension_error("rho length does not match dimension");
  for (double r : rho)
    if (std::abs(r) < 1e-12) throw zero_rho("rho entry below 1e-12");
  if (!is_eta_orthogonal(l, LinearExtensor::identity(n)))
    throw not_orthogonal("l is not b-orthogonal within tolerance");
  const LinearExtensor h = compose(LinearExtensor::diagonal(rho), l);
  const LinearExtensor g =
      compose(adjoint(h), compose(fiducial_eta(n, p, q), h));
  return MetricExtensor(g);
}

double factorization_residual(const GaugeFactorization& f,
                              const LinearExtensor& g) {
  const LinearExtensor rebuilt = compose(adjoint(f.h), compose(f.eta, f.h));
  return norm_inf(rebuilt - g) / std::max(1.0, norm_inf(g));
}

}  // namespace mcliff
