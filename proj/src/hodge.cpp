#include "mcliff/hodge.hpp"

namespace mcliff {

namespace {

Multivector fiducial_pseudoscalar(int n) {
  return Multivector::blade(n, (blade_mask{1} << n) - 1);
}

}  // namespace

Multivector std_tau(const BasisPair& e, double tol) {
  if (e.b_reciprocity_residual() > tol)
    throw invalid_basis("basis pair is not b-reciprocal within tolerance");
  const int n = e.dim();
  Multivector p = Multivector::scalar(n, 1.0);
  for (int j = 0; j < n; ++j) p = wedge(p, e.lower_vector(j));
  const double nn = b_scalar(p, p);
  if (std::sqrt(nn) <= singularity_threshold(e.lower))
    throw invalid_basis("basis wedge is singular");
  return p * (1.0 / std::sqrt(nn));
}

Multivector std_hodge(const Multivector& x, const Multivector& tau) {
  return left_contract(x.tilde(), tau);
}

Multivector std_hodge_inv(const Multivector& x, const Multivector& tau) {
  return right_contract(tau, x.tilde());
}

Multivector metric_tau(const MetricExtensor& g, const BasisPair& e,
                       double tol) {
  if (g.dim() != e.dim()) throw dimension_error("dimensions differ");
  return std_tau(e, tol) * std::sqrt(std::abs(g.det()));
}

VolumeData volume_data(const MetricExtensor& g, const BasisPair& e,
                       double tol) {
  const Multivector tau = std_tau(e, tol);
  return {tau, tau * std::sqrt(std::abs(g.det())), g.det(), g.q()};
}

Multivector metric_hodge(const MetricExtensor& g, const Multivector& x,
                         const Multivector& tau_g) {
  return left_contract(g.ext_inv().apply(x.tilde()), tau_g);
}

Multivector metric_hodge(const MetricExtensor& g, const Multivector& x) {
  const Multivector tau_g =
      fiducial_pseudoscalar(g.dim()) * std::sqrt(std::abs(g.det()));
  return metric_hodge(g, x, tau_g);
}

Multivector metric_hodge_inv(const MetricExtensor& g, const Multivector& x,
                             const Multivector& tau_g) {
  const double sign = g.q() % 2 == 0 ? 1.0 : -1.0;
  return sign * right_contract(tau_g, g.ext_inv().apply(x.tilde()));
}

Multivector metric_hodge_inv(const MetricExtensor& g, const Multivector& x) {
  const Multivector tau_g =
      fiducial_pseudoscalar(g.dim()) * std::sqrt(std::abs(g.det()));
  return metric_hodge_inv(g, x, tau_g);
}

Multivector eta_hodge(std::span<const double> eta, const Multivector& x) {
  return diag_left_contract(x.tilde(), fiducial_pseudoscalar(x.dim()), eta);
}

HodgePair hodge_relation_standard(const MetricExtensor& g,
                                  const Multivector& x) {
  const Multivector lhs = metric_hodge(g, x);
  const Multivector std = std_hodge(x, fiducial_pseudoscalar(g.dim()));
  const double factor = (g.q() % 2 == 0 ? 1.0 : -1.0) /
                        std::sqrt(std::abs(g.det()));
  return {lhs, g.ext().apply(std) * factor};
}

HodgePair hodge_relation_gauge(const MetricExtensor& g, const Multivector& x) {
  const Multivector lhs = metric_hodge(g, x);
  const double sign = determinant(g.gauge().h) < 0.0 ? -1.0 : 1.0;
  const Multivector rhs = g.ext_h_adj().apply(
      eta_hodge(g.eta(), g.ext_h_star().apply(x)));
  return {lhs, rhs * sign};
}

HodgePair hodge_relation_gauge(const GaugeFactorization& f,
                               const Multivector& x) {
  const LinearExtensor g =
      compose(adjoint(f.h), compose(f.eta, f.h));
  return hodge_relation_gauge(MetricExtensor(g), x);
}

}  // namespace mcliff
