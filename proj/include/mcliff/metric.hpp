#pragma once

#include "mcliff/gauge.hpp"

namespace mcliff {

// Validated symmetric nondegenerate metric together with every cache the
// deformed products need: eigen data, determinant, canonical gauge factor,
// and the extended (outermorphism) tables of g, g^-1, h, h^-1, adjoint(h)
// and star(h). All caches are built at construction.
class MetricExtensor {
 public:
  explicit MetricExtensor(const LinearExtensor& g);
  static MetricExtensor identity(int n);

  int dim() const { return g_.dim(); }
  int p() const { return gauge_.p; }
  int q() const { return gauge_.q; }
  double det() const { return det_; }
  const LinearExtensor& matrix() const { return g_; }
  const LinearExtensor& inverse_matrix() const { return ginv_; }
  const SpectralDecomposition& spectral() const { return sd_; }
  const GaugeFactorization& gauge() const { return gauge_; }
  std::span<const double> eta() const { return eta_; }

  const Outermorphism& ext() const { return ext_g_; }
  const Outermorphism& ext_inv() const { return ext_ginv_; }
  const Outermorphism& ext_h() const { return ext_h_; }
  const Outermorphism& ext_h_inv() const { return ext_hinv_; }
  const Outermorphism& ext_h_adj() const { return ext_hadj_; }
  const Outermorphism& ext_h_star() const { return ext_hstar_; }

 private:
  struct Core;
  static Core make_core(const LinearExtensor& g);
  explicit MetricExtensor(Core&& c);

  LinearExtensor g_;
  LinearExtensor ginv_;
  SpectralDecomposition sd_;
  GaugeFactorization gauge_;
  std::vector<double> eta_;
  double det_;
  Outermorphism ext_g_;
  Outermorphism ext_ginv_;
  Outermorphism ext_h_;
  Outermorphism ext_hinv_;
  Outermorphism ext_hadj_;
  Outermorphism ext_hstar_;
};

// Deformed products. Contractions weight the contracted argument through
// the extended metric; the Clifford product runs through the gauge factor:
// X o_g Y = ext(h)^-1 [ ext(h)X o_eta ext(h)Y ].
double g_scalar(const MetricExtensor& g, const Multivector& x,
                const Multivector& y);
Multivector g_left_contract(const MetricExtensor& g, const Multivector& x,
                            const Multivector& y);
Multivector g_right_contract(const MetricExtensor& g, const Multivector& x,
                             const Multivector& y);
Multivector g_clifford(const MetricExtensor& g, const Multivector& x,
                       const Multivector& y);
// Independent reference: the grade-recursive expansion from the product
// axioms (vector case v o Y = gbar(v) lcontract Y + v wedge Y), built on
// the serial kernels only. Used to cross-check the gauge route.
Multivector g_clifford_oracle(const MetricExtensor& g, const Multivector& x,
                              const Multivector& y);

// Products of the inverse metric, used by the metric Hodge maps. The gauge
// factor of g^-1 is star(h) with the same eta.
double g_inv_scalar(const MetricExtensor& g, const Multivector& x,
                    const Multivector& y);
Multivector g_inv_left_contract(const MetricExtensor& g, const Multivector& x,
                                const Multivector& y);
Multivector g_inv_right_contract(const MetricExtensor& g, const Multivector& x,
                                 const Multivector& y);
Multivector g_inv_clifford(const MetricExtensor& g, const Multivector& x,
                           const Multivector& y);

// Metric-reciprocal images of a b-reciprocal pair under f: lower through f,
// upper through g^-1 o star(f); the results pair to delta under the metric
// scalar product. Throws singular_extensor when f is singular.
BasisPair reciprocal_bases(const LinearExtensor& f, const MetricExtensor& g,
                           const BasisPair& e);
double g_reciprocity_residual(const MetricExtensor& g, const BasisPair& e);

// Expansion of X over the blades of a metric-reciprocal pair; recovers X
// when the pair is valid. Throws invalid_basis when the reciprocity
// residual exceeds tol.
enum class ExpandDirection { covariant, contravariant };
Multivector expand(const MetricExtensor& g, const Multivector& x,
                   const BasisPair& e, ExpandDirection dir, double tol = 1e-8);

// Adjoint with respect to g: g^-1 o adjoint(t) o g.
LinearExtensor metric_adjoint(const LinearExtensor& t,
                              const MetricExtensor& g);

}  // namespace mcliff
