#include "mcliff/metric.hpp"

#include <bit>

#include "mcliff/kernels.hpp"

namespace mcliff {

struct MetricExtensor::Core {
  LinearExtensor g;
  LinearExtensor ginv;
  SpectralDecomposition sd;
  GaugeFactorization gauge;
  double det;
};

MetricExtensor::Core MetricExtensor::make_core(const LinearExtensor& g_in) {
  const int n = g_in.dim();
  // symmetry gate, then work with the symmetrized matrix
  double asym = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      asym = std::max(asym, std::abs(g_in(i, j) - g_in(j, i)));
  if (asym > 1e-10 * std::max(1.0, norm_inf(g_in)))
    throw not_symmetric("metric is not symmetric within tolerance");
  LinearExtensor g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = 0.5 * (g_in(i, j) + g_in(j, i));

  SpectralDecomposition sd = eigen_sym(g);
  const double cutoff = degeneracy_threshold(sd);
  for (double lam : sd.eigenvalues)
    if (std::abs(lam) <= cutoff)
      throw degenerate_metric("metric eigenvalue at or below threshold");

  GaugeFactorization gauge = factor_from_spectral(sd);
  return {g, inverse(g), std::move(sd), std::move(gauge), determinant(g)};
}

MetricExtensor::MetricExtensor(const LinearExtensor& g)
    : MetricExtensor(make_core(g)) {}

MetricExtensor::MetricExtensor(Core&& c)
    : g_(std::move(c.g)),
      ginv_(std::move(c.ginv)),
      sd_(std::move(c.sd)),
      gauge_(std::move(c.gauge)),
      eta_(gauge_.eta_diag()),
      det_(c.det),
      ext_g_(g_),
      ext_ginv_(ginv_),
      ext_h_(gauge_.h),
      ext_hinv_(inverse(gauge_.h)),
      ext_hadj_(adjoint(gauge_.h)),
      ext_hstar_(star(gauge_.h)) {}

MetricExtensor MetricExtensor::identity(int n) {
  return MetricExtensor(LinearExtensor::identity(n));
}

double g_scalar(const MetricExtensor& g, const Multivector& x,
                const Multivector& y) {
  return b_scalar(g.ext().apply(x), y);
}

Multivector g_left_contract(const MetricExtensor& g, const Multivector& x,
                            const Multivector& y) {
  return left_contract(g.ext().apply(x), y);
}

Multivector g_right_contract(const MetricExtensor& g, const Multivector& x,
                             const Multivector& y) {
  return right_contract(x, g.ext().apply(y));
}

Multivector g_clifford(const MetricExtensor& g, const Multivector& x,
                       const Multivector& y) {
  const Multivector hx = g.ext_h().apply(x);
  const Multivector hy = g.ext_h().apply(y);
  return g.ext_h_inv().apply(diag_clifford(hx, hy, g.eta()));
}

Multivector g_clifford_oracle(const MetricExtensor& g, const Multivector& x,
                              const Multivector& y) {
  if (g.dim() != x.dim() || x.dim() != y.dim())
    throw dimension_error("dimensions differ");
  const int n = g.dim();
  const blade_mask size = x.size();

  // v o Y for basis vector v = b_{i+1}, on the serial reference kernels
  const auto vector_product = [&](int i, const Multivector& yy) {
    const Multivector gv =
        Multivector::from_vector(n, g.matrix().column(i));
    const Multivector bi = Multivector::blade(n, blade_mask{1} << i);
    Multivector contracted(n), wedged(n);
    kernels::serial::left_contract(n, gv.data(), yy.data(),
                                   contracted.data(), nullptr);
    kernels::serial::wedge(n, bi.data(), yy.data(), wedged.data());
    return contracted + wedged;
  };

  // memo[A] = blade(A) o Y, filled in ascending mask order via
  // blade(A) o Y = b_i o (blade(A') o Y) - (b_i contracted into A') o Y
  std::vector<Multivector> memo;
  memo.reserve(size);
  memo.push_back(y);
  for (blade_mask a = 1; a < size; ++a) {
    const int i = std::countr_zero(a);
    const blade_mask rest = a & (a - 1);
    Multivector r = vector_product(i, memo[rest]);
    if (rest != 0) {
      const Multivector gv =
          Multivector::from_vector(n, g.matrix().column(i));
      const Multivector bl = Multivector::blade(n, rest);
      Multivector u(n);
      kernels::serial::left_contract(n, gv.data(), bl.data(), u.data(),
                                     nullptr);
      for (blade_mask m = 0; m < size; ++m)
        if (u[m] != 0.0) r -= u[m] * memo[m];
    }
    memo.push_back(std::move(r));
  }

  Multivector out(n);
  for (blade_mask a = 0; a < size; ++a)
    if (x[a] != 0.0) out += x[a] * memo[a];
  return out;
}

double g_inv_scalar(const MetricExtensor& g, const Multivector& x,
                    const Multivector& y) {
  return b_scalar(g.ext_inv().apply(x), y);
}

Multivector g_inv_left_contract(const MetricExtensor& g, const Multivector& x,
                                const Multivector& y) {
  return left_contract(g.ext_inv().apply(x), y);
}

Multivector g_inv_right_contract(const MetricExtensor& g, const Multivector& x,
                                 const Multivector& y) {
  return right_contract(x, g.ext_inv().apply(y));
}

Multivector g_inv_clifford(const MetricExtensor& g, const Multivector& x,
                           const Multivector& y) {
  const Multivector kx = g.ext_h_star().apply(x);
  const Multivector ky = g.ext_h_star().apply(y);
  return g.ext_h_adj().apply(diag_clifford(kx, ky, g.eta()));
}

BasisPair reciprocal_bases(const LinearExtensor& f, const MetricExtensor& g,
                           const BasisPair& e) {
  if (f.dim() != g.dim() || f.dim() != e.dim())
    throw dimension_error("dimensions differ");
  return {compose(f, e.lower),
          compose(g.inverse_matrix(), compose(star(f), e.upper))};
}

double g_reciprocity_residual(const MetricExtensor& g, const BasisPair& e) {
  const int n = g.dim();
  double worst = 0.0;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const double dot =
          g_scalar(g, e.lower_vector(k), e.upper_vector(l));
      worst = std::max(worst, std::abs(dot - (k == l ? 1.0 : 0.0)));
    }
  return worst;
}

Multivector expand(const MetricExtensor& g, const Multivector& x,
                   const BasisPair& e, ExpandDirection dir, double tol) {
  if (g.dim() != x.dim() || g.dim() != e.dim())
    throw dimension_error("dimensions differ");
  if (g_reciprocity_residual(g, e) > tol)
    throw invalid_basis("basis pair is not metric-reciprocal within tolerance");
  const Outermorphism lower(e.lower);
  const Outermorphism upper(e.upper);
  const Outermorphism& coeff_side =
      dir == ExpandDirection::covariant ? upper : lower;
  const Outermorphism& basis_side =
      dir == ExpandDirection::covariant ? lower : upper;
  Multivector out(x.dim());
  for (blade_mask m = 0; m < x.size(); ++m)
    out += g_scalar(g, x, coeff_side.column(m)) * basis_side.column(m);
  return out;
}

LinearExtensor metric_adjoint(const LinearExtensor& t,
                              const MetricExtensor& g) {
  if (t.dim() != g.dim()) throw dimension_error("dimensions differ");
  return compose(g.inverse_matrix(), compose(adjoint(t), g.matrix()));
}

}  // namespace mcliff
