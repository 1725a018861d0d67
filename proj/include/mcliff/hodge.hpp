#pragma once

#include "mcliff/metric.hpp"

namespace mcliff {

struct VolumeData {
  Multivector tau;    // unit volume of the basis (orientation included)
  Multivector tau_g;  // metric volume: sqrt(|det g|) * tau
  double det_g;
  int q;
};

// Normalized pseudoscalar of a b-reciprocal pair: the wedge of the lower
// basis scaled to unit norm; reduces to +-(unit pseudoscalar blade) by the
// basis orientation. Throws invalid_basis when the pair fails b-reciprocity
// within tol or its wedge is singular.
Multivector std_tau(const BasisPair& e, double tol = 1e-8);

// Duality maps of the fiducial algebra: x -> tilde(x) lcontract tau and its
// inverse x -> tau rcontract tilde(x).
Multivector std_hodge(const Multivector& x, const Multivector& tau);
Multivector std_hodge_inv(const Multivector& x, const Multivector& tau);

Multivector metric_tau(const MetricExtensor& g, const BasisPair& e,
                       double tol = 1e-8);
VolumeData volume_data(const MetricExtensor& g, const BasisPair& e,
                       double tol = 1e-8);

// Metric duality maps: x -> ext(g^-1)(tilde(x)) lcontract tau_g, with
// inverse x -> (-1)^q * tau_g rcontract ext(g^-1)(tilde(x)). The two-arg
// forms use the fiducial positively-oriented tau_g.
Multivector metric_hodge(const MetricExtensor& g, const Multivector& x);
Multivector metric_hodge(const MetricExtensor& g, const Multivector& x,
                         const Multivector& tau_g);
Multivector metric_hodge_inv(const MetricExtensor& g, const Multivector& x);
Multivector metric_hodge_inv(const MetricExtensor& g, const Multivector& x,
                             const Multivector& tau_g);

// Duality map of the orthogonal metric with signs `eta`, fiducial volume.
Multivector eta_hodge(std::span<const double> eta, const Multivector& x);

// Both sides of the two closed-form relations tying the metric map to the
// fiducial one; equal up to rounding for a valid metric.
struct HodgePair {
  Multivector lhs;
  Multivector rhs;
};
// lhs = metric map; rhs = (-1)^q / sqrt(|det g|) * ext(g)(std map).
HodgePair hodge_relation_standard(const MetricExtensor& g,
                                  const Multivector& x);
// lhs = metric map; rhs = sign(det h) * ext(adjoint h)(eta map(ext(star h))).
HodgePair hodge_relation_gauge(const MetricExtensor& g, const Multivector& x);
HodgePair hodge_relation_gauge(const GaugeFactorization& f,
                               const Multivector& x);

}  // namespace mcliff
