#pragma once

#include "mcliff/spectral.hpp"

namespace mcliff {

class MetricExtensor;

// Factorization g = adjoint(h) o eta o h, with eta the orthogonal metric
// diag(+1 x p, -1 x q) of the same signature as g.
struct GaugeFactorization {
  LinearExtensor h;
  LinearExtensor eta;
  int p = 0;
  int q = 0;

  int dim() const { return h.dim(); }
  std::vector<double> eta_diag() const;  // the +-1 entries
};

LinearExtensor fiducial_eta(int n, int p, int q);
std::vector<double> eta_signs(int n, int p, int q);

// Canonical gauge factor from eigen data: h sends the k-th eigenvector to
// sqrt(|lambda_k|) b_k. Eigenpairs are consumed with positives leading and
// each sign block in ascending magnitude, so diagonal metrics produce
// diagonal h. Throws degenerate_metric on eigenvalues at or below the
// degeneracy threshold.
GaugeFactorization factor_from_spectral(const SpectralDecomposition& sd);
GaugeFactorization gauge_from_metric(const MetricExtensor& g);

// ||adjoint(l) o eta o l - eta||_inf <= tol * max(1, ||eta||_inf)
bool is_eta_orthogonal(const LinearExtensor& l, const LinearExtensor& eta,
                       double tol = 1e-10);

// Replaces h by l o h for eta-orthogonal l: the factored metric is
// unchanged. Throws not_eta_orthogonal otherwise.
GaugeFactorization compose_gauge(const LinearExtensor& l,
                                 const GaugeFactorization& f,
                                 double tol = 1e-10);

// Images of a b-reciprocal pair under the gauge: lower through h, upper
// through star(h). The result is again b-reciprocal and diagonalizes the
// factored metric (metric grams eta and eta^-1).
BasisPair gauge_bases(const GaugeFactorization& f, const BasisPair& e);

// Metric built from the gauge factor h = diag(rho) o l under signature
// (p, q), with l b-orthogonal. Throws zero_rho on any |rho_k| below 1e-12,
// not_orthogonal when l is not b-orthogonal within 1e-10.
MetricExtensor metric_from_rho_l(std::span<const double> rho,
                                 const LinearExtensor& l, int p, int q);

// Relative reconstruction error ||adjoint(h) o eta o h - g||.
double factorization_residual(const GaugeFactorization& f,
                              const LinearExtensor& g);

}  // namespace mcliff
