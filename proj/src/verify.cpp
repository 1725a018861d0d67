#include "mcliff/verify.hpp"

#include <limits>
#include <span>

#include "mcliff/random.hpp"

namespace mcliff::verify {

namespace {

struct Ctx {
  const MetricExtensor& g;
  rnd::Rng& rng;
  int n() const { return g.dim(); }
};

using Fn = double (*)(Ctx&);

struct Identity {
  const char* name;
  Fn fn;
};

double parity_sign(long e) { return (e % 2 + 2) % 2 == 0 ? 1.0 : -1.0; }

Multivector mv(Ctx& c) { return rnd::random_multivector(c.rng, c.n()); }
Multivector homog(Ctx& c, int k) {
  return rnd::random_homogeneous(c.rng, c.n(), k);
}
Multivector vec(Ctx& c) { return rnd::random_vector(c.rng, c.n()); }

double mat_residual(const LinearExtensor& a, const LinearExtensor& b) {
  return norm_inf(a - b) / std::max({1.0, norm_inf(a), norm_inf(b)});
}

// ---- metric products ------------------------------------------------------

double id_scalar_scalars(Ctx& c) {
  const double a = c.rng.uniform(-2.0, 2.0);
  const double b = c.rng.uniform(-2.0, 2.0);
  const double lhs = g_scalar(c.g, Multivector::scalar(c.n(), a),
                              Multivector::scalar(c.n(), b));
  return rel_residual(lhs, a * b);
}

double id_scalar_grade_orthogonality(Ctx& c) {
  const int n = c.n();
  const int j = c.rng.uniform_int(0, n);
  int k = c.rng.uniform_int(0, n);
  if (j == k) k = (k + 1) % (n + 1);
  return rel_residual(g_scalar(c.g, homog(c, j), homog(c, k)), 0.0);
}

double id_scalar_gram_determinant(Ctx& c) {
  const int n = c.n();
  const int k = c.rng.uniform_int(1, n);
  std::vector<Multivector> v;
  std::vector<Multivector> w;
  Multivector vx = Multivector::scalar(n, 1.0);
  Multivector wx = vx;
  for (int i = 0; i < k; ++i) {
    v.push_back(vec(c));
    w.push_back(vec(c));
    vx = wedge(vx, v.back());
    wx = wedge(wx, w.back());
  }
  LinearExtensor gram(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) gram.at(i, j) = g_scalar(c.g, v[i], w[j]);
  return rel_residual(g_scalar(c.g, vx, wx), determinant(gram));
}

double id_scalar_hat_transfer(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  return rel_residual(g_scalar(c.g, x.hat(), y), g_scalar(c.g, x, y.hat()));
}

double id_scalar_tilde_transfer(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  return rel_residual(g_scalar(c.g, x.tilde(), y),
                      g_scalar(c.g, x, y.tilde()));
}

double id_contract_scalar_laws(Ctx& c) {
  const double a = c.rng.uniform(-2.0, 2.0);
  const Multivector x = mv(c);
  const Multivector s = Multivector::scalar(c.n(), a);
  return std::max(rel_residual(g_left_contract(c.g, s, x), a * x),
                  rel_residual(g_right_contract(c.g, x, s), a * x));
}

double id_contract_grade_sign_swap(Ctx& c) {
  const int n = c.n();
  const int j = c.rng.uniform_int(0, n);
  const int k = c.rng.uniform_int(0, n);
  const Multivector x = homog(c, j);
  const Multivector y = homog(c, k);
  const double sign = parity_sign(static_cast<long>(j) * (k - j));
  return rel_residual(g_left_contract(c.g, x, y),
                      sign * g_right_contract(c.g, y, x));
}

double id_contract_grade_vanishing(Ctx& c) {
  const int n = c.n();
  const int j = c.rng.uniform_int(1, n);
  const int k = c.rng.uniform_int(0, j - 1);
  const Multivector x = homog(c, j);
  const Multivector y = homog(c, k);
  const Multivector zero(n);
  return std::max(rel_residual(g_left_contract(c.g, x, y), zero),
                  rel_residual(g_right_contract(c.g, y, x), zero));
}

double id_contract_same_grade_scalar(Ctx& c) {
  const int k = c.rng.uniform_int(0, c.n());
  const Multivector x = homog(c, k);
  const Multivector y = homog(c, k);
  const Multivector expect =
      Multivector::scalar(c.n(), g_scalar(c.g, x.tilde(), y));
  return std::max(rel_residual(g_left_contract(c.g, x, y), expect),
                  rel_residual(g_right_contract(c.g, x, y), expect));
}

double id_contract_wedge_derivation(Ctx& c) {
  const Multivector v = vec(c);
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  const Multivector lhs = g_left_contract(c.g, v, wedge(x, y));
  const Multivector rhs = wedge(g_left_contract(c.g, v, x), y) +
                          wedge(x.hat(), g_left_contract(c.g, v, y));
  return rel_residual(lhs, rhs);
}

double id_contract_duality_left(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  const Multivector z = mv(c);
  return rel_residual(g_scalar(c.g, g_left_contract(c.g, x, y), z),
                      g_scalar(c.g, y, wedge(x.tilde(), z)));
}

double id_contract_duality_right(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  const Multivector z = mv(c);
  return rel_residual(g_scalar(c.g, g_right_contract(c.g, x, y), z),
                      g_scalar(c.g, x, wedge(z, y.tilde())));
}

double id_contract_left_composition(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  const Multivector z = mv(c);
  return rel_residual(g_left_contract(c.g, wedge(x, y), z),
                      g_left_contract(c.g, x, g_left_contract(c.g, y, z)));
}

double id_contract_right_composition(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  const Multivector z = mv(c);
  return rel_residual(g_right_contract(c.g, x, wedge(y, z)),
                      g_right_contract(c.g, g_right_contract(c.g, x, y), z));
}

double id_clifford_vector_split(Ctx& c) {
  const Multivector v = vec(c);
  const Multivector x = mv(c);
  const double r1 = rel_residual(
      g_clifford(c.g, v, x), g_left_contract(c.g, v, x) + wedge(v, x));
  const double r2 = rel_residual(
      g_clifford(c.g, x, v), g_right_contract(c.g, x, v) + wedge(x, v));
  return std::max(r1, r2);
}

double id_clifford_scalar_part(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  return rel_residual(g_clifford(c.g, x, y)[0], g_scalar(c.g, x.tilde(), y));
}

double id_clifford_contract_projection(Ctx& c) {
  const int n = c.n();
  const int k = c.rng.uniform_int(0, n);
  const int j = c.rng.uniform_int(0, k);
  const Multivector xl = homog(c, j);
  const Multivector yl = homog(c, k);
  const double r1 = rel_residual(g_left_contract(c.g, xl, yl),
                                 grade_project(g_clifford(c.g, xl, yl), k - j));
  const Multivector xr = homog(c, k);
  const Multivector yr = homog(c, j);
  const double r2 =
      rel_residual(g_right_contract(c.g, xr, yr),
                   grade_project(g_clifford(c.g, xr, yr), k - j));
  return std::max(r1, r2);
}

double id_clifford_wedge_projection(Ctx& c) {
  const int n = c.n();
  const int j = c.rng.uniform_int(0, n);
  const int k = c.rng.uniform_int(0, n);
  const Multivector x = homog(c, j);
  const Multivector y = homog(c, k);
  const Multivector rhs = j + k <= n
                              ? grade_project(g_clifford(c.g, x, y), j + k)
                              : Multivector(n);
  return rel_residual(wedge(x, y), rhs);
}

double id_clifford_hat_homomorphism(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  return rel_residual(g_clifford(c.g, x, y).hat(),
                      g_clifford(c.g, x.hat(), y.hat()));
}

double id_clifford_tilde_antihomomorphism(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  return rel_residual(g_clifford(c.g, x, y).tilde(),
                      g_clifford(c.g, y.tilde(), x.tilde()));
}

double id_clifford_pseudoscalar_contract(Ctx& c) {
  const int n = c.n();
  const Multivector i =
      Multivector::blade(n, (blade_mask{1} << n) - 1, c.rng.uniform(-2.0, 2.0));
  const Multivector x = mv(c);
  return std::max(
      rel_residual(g_clifford(c.g, i, x), g_right_contract(c.g, i, x)),
      rel_residual(g_clifford(c.g, x, i), g_left_contract(c.g, x, i)));
}

double id_clifford_associativity(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  const Multivector z = mv(c);
  return rel_residual(g_clifford(c.g, g_clifford(c.g, x, y), z),
                      g_clifford(c.g, x, g_clifford(c.g, y, z)));
}

double id_clifford_vector_law(Ctx& c) {
  const Multivector v = vec(c);
  return rel_residual(g_clifford(c.g, v, v),
                      Multivector::scalar(c.n(), g_scalar(c.g, v, v)));
}

double id_clifford_unit(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector one = Multivector::scalar(c.n(), 1.0);
  return std::max(rel_residual(g_clifford(c.g, one, x), x),
                  rel_residual(g_clifford(c.g, x, one), x));
}

double id_clifford_oracle_agreement(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  return rel_residual(g_clifford(c.g, x, y), g_clifford_oracle(c.g, x, y));
}

double id_scalar_nondegeneracy_scan(Ctx& c) {
  const int n = c.n();
  Multivector y = mv(c);
  if (y.norm_inf() < 1e-3) y += Multivector::scalar(n, 1.0);
  double best = 0.0;
  for (blade_mask m = 0; m < y.size(); ++m)
    best = std::max(
        best, std::abs(b_scalar(c.g.ext().column(m), y)));
  return best > 1e-9 * std::max(1.0, y.norm_inf()) ? 0.0 : 1.0;
}

// ---- gauge ----------------------------------------------------------------

double id_gauge_reconstruction(Ctx& c) {
  return factorization_residual(c.g.gauge(), c.g.matrix());
}

double id_gauge_eta_involutive(Ctx& c) {
  const LinearExtensor& eta = c.g.gauge().eta;
  return mat_residual(compose(eta, eta), LinearExtensor::identity(c.n()));
}

double id_gauge_eta_self_adjoint(Ctx& c) {
  const LinearExtensor& eta = c.g.gauge().eta;
  return mat_residual(adjoint(eta), eta);
}

double id_gauge_eta_determinant_sign(Ctx& c) {
  return rel_residual(determinant(c.g.gauge().eta),
                      parity_sign(c.g.q()));
}

double id_gauge_determinant_signature(Ctx& c) {
  const double dh = determinant(c.g.gauge().h);
  return rel_residual(c.g.det(), parity_sign(c.g.q()) * dh * dh);
}

double id_gauge_eta_orthogonality(Ctx& c) {
  const LinearExtensor l =
      rnd::random_eta_orthogonal(c.rng, c.n(), c.g.p(), c.g.q());
  const LinearExtensor& eta = c.g.gauge().eta;
  return norm_inf(compose(adjoint(l), compose(eta, l)) - eta) /
         std::max(1.0, norm_inf(eta));
}

double id_gauge_orbit_reconstruction(Ctx& c) {
  const LinearExtensor l =
      rnd::random_eta_orthogonal(c.rng, c.n(), c.g.p(), c.g.q());
  const GaugeFactorization moved = compose_gauge(l, c.g.gauge());
  return factorization_residual(moved, c.g.matrix());
}

double id_gauge_bases_reciprocity(Ctx& c) {
  const BasisPair e =
      BasisPair::from_extensor(rnd::random_invertible(c.rng, c.n()));
  return gauge_bases(c.g.gauge(), e).b_reciprocity_residual();
}

double id_gauge_bases_metric_gram(Ctx& c) {
  const int n = c.n();
  const BasisPair e =
      BasisPair::from_extensor(rnd::random_invertible(c.rng, n));
  const BasisPair u = gauge_bases(c.g.gauge(), e);
  double worst = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      worst = std::max(
          worst,
          rel_residual(
              diag_scalar(u.lower_vector(j), u.lower_vector(k), c.g.eta()),
              g_scalar(c.g, e.lower_vector(j), e.lower_vector(k))));
  return worst;
}

double id_gauge_bases_inverse_gram(Ctx& c) {
  const int n = c.n();
  const BasisPair e =
      BasisPair::from_extensor(rnd::random_invertible(c.rng, n));
  const BasisPair u = gauge_bases(c.g.gauge(), e);
  double worst = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      worst = std::max(
          worst,
          rel_residual(
              diag_scalar(u.upper_vector(j), u.upper_vector(k), c.g.eta()),
              g_inv_scalar(c.g, e.upper_vector(j), e.upper_vector(k))));
  return worst;
}

double id_gauge_rho_l_roundtrip(Ctx& c) {
  const int n = c.n();
  std::vector<double> rho(n);
  for (double& r : rho) {
    r = c.rng.uniform(0.5, 2.0);
    if (c.rng.uniform() < 0.5) r = -r;
  }
  const LinearExtensor l = rnd::random_orthogonal(c.rng, n);
  const MetricExtensor m = metric_from_rho_l(rho, l, c.g.p(), c.g.q());
  const LinearExtensor h = compose(LinearExtensor::diagonal(rho), l);
  const LinearExtensor expect =
      compose(adjoint(h), compose(fiducial_eta(n, c.g.p(), c.g.q()), h));
  const double sig_ok =
      m.p() == c.g.p() && m.q() == c.g.q() ? 0.0 : 1.0;
  return mat_residual(m.matrix(), expect) + sig_ok;
}

double id_reciprocal_bases_condition(Ctx& c) {
  const LinearExtensor f = rnd::random_invertible(c.rng, c.n());
  const BasisPair e =
      BasisPair::from_extensor(rnd::random_invertible(c.rng, c.n()));
  return g_reciprocity_residual(c.g, reciprocal_bases(f, c.g, e));
}

double id_expansion_covariant(Ctx& c) {
  const LinearExtensor f = rnd::random_invertible(c.rng, c.n());
  const BasisPair e =
      BasisPair::from_extensor(rnd::random_invertible(c.rng, c.n()));
  const BasisPair big = reciprocal_bases(f, c.g, e);
  const Multivector x = mv(c);
  return rel_residual(expand(c.g, x, big, ExpandDirection::covariant), x);
}

double id_expansion_contravariant(Ctx& c) {
  const LinearExtensor f = rnd::random_invertible(c.rng, c.n());
  const BasisPair e =
      BasisPair::from_extensor(rnd::random_invertible(c.rng, c.n()));
  const BasisPair big = reciprocal_bases(f, c.g, e);
  const Multivector x = mv(c);
  return rel_residual(expand(c.g, x, big, ExpandDirection::contravariant), x);
}

double id_metric_adjoint_characterization(Ctx& c) {
  const LinearExtensor t = rnd::random_invertible(c.rng, c.n());
  const LinearExtensor madj = metric_adjoint(t, c.g);
  const Multivector x = vec(c);
  const Multivector y = vec(c);
  return rel_residual(g_scalar(c.g, madj.apply(x), y),
                      g_scalar(c.g, x, t.apply(y)));
}

double id_metric_adjoint_determinant(Ctx& c) {
  const LinearExtensor t = rnd::random_invertible(c.rng, c.n());
  return rel_residual(determinant(metric_adjoint(t, c.g)), determinant(t));
}

double id_metric_adjoint_involution(Ctx& c) {
  const LinearExtensor t = rnd::random_invertible(c.rng, c.n());
  return mat_residual(metric_adjoint(metric_adjoint(t, c.g), c.g), t);
}

// ---- golden (gauge transfer of every product) ------------------------------

double id_golden_wedge(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  const Outermorphism& h = c.g.ext_h();
  return rel_residual(h.apply(wedge(x, y)), wedge(h.apply(x), h.apply(y)));
}

double id_golden_scalar(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  const Outermorphism& h = c.g.ext_h();
  return rel_residual(g_scalar(c.g, x, y),
                      diag_scalar(h.apply(x), h.apply(y), c.g.eta()));
}

double id_golden_left_contract(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  const Outermorphism& h = c.g.ext_h();
  return rel_residual(
      h.apply(g_left_contract(c.g, x, y)),
      diag_left_contract(h.apply(x), h.apply(y), c.g.eta()));
}

double id_golden_right_contract(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  const Outermorphism& h = c.g.ext_h();
  return rel_residual(
      h.apply(g_right_contract(c.g, x, y)),
      diag_right_contract(h.apply(x), h.apply(y), c.g.eta()));
}

double id_golden_clifford(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  const Outermorphism& h = c.g.ext_h();
  return rel_residual(h.apply(g_clifford(c.g, x, y)),
                      diag_clifford(h.apply(x), h.apply(y), c.g.eta()));
}

// ---- hodge ------------------------------------------------------------------

Multivector fid_tau(int n) {
  return Multivector::blade(n, (blade_mask{1} << n) - 1);
}

double id_hodge_volume_unit(Ctx& c) {
  const BasisPair e =
      BasisPair::from_extensor(rnd::random_invertible(c.rng, c.n()));
  const Multivector tau = std_tau(e);
  return rel_residual(b_scalar(tau, tau), 1.0);
}

double id_hodge_volume_expansion(Ctx& c) {
  const int n = c.n();
  const BasisPair e =
      BasisPair::from_extensor(rnd::random_invertible(c.rng, n));
  const Multivector tau = std_tau(e);
  const Multivector i =
      Multivector::blade(n, (blade_mask{1} << n) - 1, c.rng.uniform(-2.0, 2.0));
  return rel_residual(i, b_scalar(i, tau) * tau);
}

double id_hodge_inverse_composition(Ctx& c) {
  const BasisPair e =
      BasisPair::from_extensor(rnd::random_invertible(c.rng, c.n()));
  const Multivector tau = std_tau(e);
  const Multivector x = mv(c);
  return std::max(
      rel_residual(std_hodge_inv(std_hodge(x, tau), tau), x),
      rel_residual(std_hodge(std_hodge_inv(x, tau), tau), x));
}

double id_hodge_scalar_preservation(Ctx& c) {
  const Multivector tau = fid_tau(c.n());
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  return rel_residual(b_scalar(std_hodge(x, tau), std_hodge(y, tau)),
                      b_scalar(x, y));
}

double id_hodge_wedge_characterization(Ctx& c) {
  const int k = c.rng.uniform_int(0, c.n());
  const Multivector tau = fid_tau(c.n());
  const Multivector x = homog(c, k);
  const Multivector y = homog(c, k);
  return rel_residual(wedge(x, std_hodge(y, tau)), b_scalar(x, y) * tau);
}

double id_hodge_contract_characterization(Ctx& c) {
  const int n = c.n();
  const int k = c.rng.uniform_int(0, n);
  const Multivector tau = fid_tau(n);
  const Multivector x = homog(c, k);
  const Multivector y = homog(c, n - k);
  return rel_residual(b_scalar(std_hodge(x, tau), y) * tau, wedge(x, y));
}

double id_metric_volume_unit(Ctx& c) {
  const BasisPair e =
      BasisPair::from_extensor(rnd::random_invertible(c.rng, c.n()));
  const Multivector tau_g = metric_tau(c.g, e);
  return rel_residual(g_inv_scalar(c.g, tau_g, tau_g), parity_sign(c.g.q()));
}

double id_metric_volume_expansion(Ctx& c) {
  const int n = c.n();
  const BasisPair e =
      BasisPair::from_extensor(rnd::random_invertible(c.rng, n));
  const Multivector tau_g = metric_tau(c.g, e);
  const Multivector i =
      Multivector::blade(n, (blade_mask{1} << n) - 1, c.rng.uniform(-2.0, 2.0));
  return rel_residual(
      i, parity_sign(c.g.q()) * g_inv_scalar(c.g, i, tau_g) * tau_g);
}

double id_metric_hodge_inverse_composition(Ctx& c) {
  const Multivector x = mv(c);
  return std::max(
      rel_residual(metric_hodge_inv(c.g, metric_hodge(c.g, x)), x),
      rel_residual(metric_hodge(c.g, metric_hodge_inv(c.g, x)), x));
}

double id_metric_hodge_scalar_relation(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  return rel_residual(
      g_inv_scalar(c.g, metric_hodge(c.g, x), metric_hodge(c.g, y)),
      parity_sign(c.g.q()) * g_inv_scalar(c.g, x, y));
}

double id_metric_hodge_wedge_characterization(Ctx& c) {
  const int n = c.n();
  const int k = c.rng.uniform_int(0, n);
  const Multivector x = homog(c, k);
  const Multivector y = homog(c, k);
  const Multivector tau_g = fid_tau(n) * std::sqrt(std::abs(c.g.det()));
  return rel_residual(wedge(x, metric_hodge(c.g, y)),
                      g_inv_scalar(c.g, x, y) * tau_g);
}

double id_metric_hodge_contract_characterization(Ctx& c) {
  const int n = c.n();
  const int k = c.rng.uniform_int(0, n);
  const Multivector x = homog(c, k);
  const Multivector y = homog(c, n - k);
  const Multivector tau_g = fid_tau(n) * std::sqrt(std::abs(c.g.det()));
  return rel_residual(
      g_inv_scalar(c.g, metric_hodge(c.g, x), y) * tau_g,
      parity_sign(c.g.q()) * wedge(x, y));
}

double id_hodge_relation_standard(Ctx& c) {
  const HodgePair hp = hodge_relation_standard(c.g, mv(c));
  return rel_residual(hp.lhs, hp.rhs);
}

double id_hodge_relation_gauge(Ctx& c) {
  const HodgePair hp = hodge_relation_gauge(c.g, mv(c));
  return rel_residual(hp.lhs, hp.rhs);
}

double id_inverse_contract_transfer(Ctx& c) {
  const Multivector x = mv(c);
  const Multivector y = mv(c);
  const Outermorphism& hs = c.g.ext_h_star();
  return rel_residual(
      hs.apply(g_inv_left_contract(c.g, x, y)),
      diag_left_contract(hs.apply(x), hs.apply(y), c.g.eta()));
}

double id_metric_volume_orientation(Ctx& c) {
  const int n = c.n();
  const LinearExtensor e1 = rnd::random_invertible(c.rng, n);
  LinearExtensor m = rnd::random_invertible(c.rng, n);
  if (determinant(m) < 0.0)
    for (int i = 0; i < n; ++i) m.at(i, 0) = -m(i, 0);
  const BasisPair p1 = BasisPair::from_extensor(e1);
  const BasisPair p2 = BasisPair::from_extensor(compose(e1, m));
  return rel_residual(metric_tau(c.g, p1), metric_tau(c.g, p2));
}

// ---- tables ----------------------------------------------------------------

constexpr Identity kMetricProducts[] = {
    {"scalar_product_of_scalars", id_scalar_scalars},
    {"scalar_grade_orthogonality", id_scalar_grade_orthogonality},
    {"scalar_gram_determinant", id_scalar_gram_determinant},
    {"scalar_hat_transfer", id_scalar_hat_transfer},
    {"scalar_tilde_transfer", id_scalar_tilde_transfer},
    {"contract_scalar_laws", id_contract_scalar_laws},
    {"contract_grade_sign_swap", id_contract_grade_sign_swap},
    {"contract_grade_vanishing", id_contract_grade_vanishing},
    {"contract_same_grade_scalar", id_contract_same_grade_scalar},
    {"contract_wedge_derivation", id_contract_wedge_derivation},
    {"contract_duality_left", id_contract_duality_left},
    {"contract_duality_right", id_contract_duality_right},
    {"contract_left_composition", id_contract_left_composition},
    {"contract_right_composition", id_contract_right_composition},
    {"clifford_vector_split", id_clifford_vector_split},
    {"clifford_scalar_part", id_clifford_scalar_part},
    {"clifford_contract_projection", id_clifford_contract_projection},
    {"clifford_wedge_projection", id_clifford_wedge_projection},
    {"clifford_hat_homomorphism", id_clifford_hat_homomorphism},
    {"clifford_tilde_antihomomorphism", id_clifford_tilde_antihomomorphism},
    {"clifford_pseudoscalar_contract", id_clifford_pseudoscalar_contract},
    {"clifford_associativity", id_clifford_associativity},
    {"clifford_vector_law", id_clifford_vector_law},
    {"clifford_unit", id_clifford_unit},
    {"clifford_oracle_agreement", id_clifford_oracle_agreement},
    {"scalar_nondegeneracy_scan", id_scalar_nondegeneracy_scan},
};

constexpr Identity kGauge[] = {
    {"factorization_reconstruction", id_gauge_reconstruction},
    {"eta_involutive", id_gauge_eta_involutive},
    {"eta_self_adjoint", id_gauge_eta_self_adjoint},
    {"eta_determinant_sign", id_gauge_eta_determinant_sign},
    {"determinant_signature_identity", id_gauge_determinant_signature},
    {"eta_orthogonality_samples", id_gauge_eta_orthogonality},
    {"gauge_orbit_reconstruction", id_gauge_orbit_reconstruction},
    {"gauge_bases_reciprocity", id_gauge_bases_reciprocity},
    {"gauge_bases_metric_gram", id_gauge_bases_metric_gram},
    {"gauge_bases_inverse_gram", id_gauge_bases_inverse_gram},
    {"rho_l_roundtrip", id_gauge_rho_l_roundtrip},
    {"reciprocal_bases_condition", id_reciprocal_bases_condition},
    {"expansion_covariant", id_expansion_covariant},
    {"expansion_contravariant", id_expansion_contravariant},
    {"metric_adjoint_characterization", id_metric_adjoint_characterization},
    {"metric_adjoint_determinant", id_metric_adjoint_determinant},
    {"metric_adjoint_involution", id_metric_adjoint_involution},
};

constexpr Identity kGolden[] = {
    {"gauge_transfer_wedge", id_golden_wedge},
    {"gauge_transfer_scalar", id_golden_scalar},
    {"gauge_transfer_left_contract", id_golden_left_contract},
    {"gauge_transfer_right_contract", id_golden_right_contract},
    {"gauge_transfer_clifford", id_golden_clifford},
};

constexpr Identity kHodge[] = {
    {"volume_unit_norm", id_hodge_volume_unit},
    {"volume_pseudoscalar_expansion", id_hodge_volume_expansion},
    {"hodge_inverse_composition", id_hodge_inverse_composition},
    {"hodge_scalar_preservation", id_hodge_scalar_preservation},
    {"hodge_wedge_characterization", id_hodge_wedge_characterization},
    {"hodge_contract_characterization", id_hodge_contract_characterization},
    {"metric_volume_unit_norm", id_metric_volume_unit},
    {"metric_volume_expansion", id_metric_volume_expansion},
    {"metric_hodge_inverse_composition", id_metric_hodge_inverse_composition},
    {"metric_hodge_scalar_relation", id_metric_hodge_scalar_relation},
    {"metric_hodge_wedge_characterization",
     id_metric_hodge_wedge_characterization},
    {"metric_hodge_contract_characterization",
     id_metric_hodge_contract_characterization},
    {"hodge_relation_standard", id_hodge_relation_standard},
    {"hodge_relation_gauge", id_hodge_relation_gauge},
    {"inverse_contract_transfer", id_inverse_contract_transfer},
    {"metric_volume_orientation_invariance", id_metric_volume_orientation},
};

}  // namespace

Suite suite_from_name(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "metric-products") return Suite::metric_products;
  if (name == "gauge") return Suite::gauge;
  if (name == "golden") return Suite::golden;
  if (name == "hodge") return Suite::hodge;
  throw parse_error("unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::metric_products: return "metric-products";
    case Suite::gauge: return "gauge";
    case Suite::golden: return "golden";
    case Suite::hodge: return "hodge";
  }
  return "all";
}

SuiteReport run_suite(const MetricExtensor& g, Suite suite, std::uint64_t seed,
                      int trials, double tolerance) {
  if (trials < 1) throw parse_error("trials must be positive");
  std::vector<Identity> ids;
  const auto append = [&ids](std::span<const Identity> table) {
    ids.insert(ids.end(), table.begin(), table.end());
  };
  if (suite == Suite::all || suite == Suite::metric_products)
    append(kMetricProducts);
  if (suite == Suite::all || suite == Suite::gauge) append(kGauge);
  if (suite == Suite::all || suite == Suite::golden) append(kGolden);
  if (suite == Suite::all || suite == Suite::hodge) append(kHodge);

  SuiteReport rep;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (int t = 0; t < trials; ++t) {
      double r;
      try {
        rnd::Rng rng(rnd::mix_seed(rnd::mix_seed(seed, i), t));
        Ctx c{g, rng};
        r = ids[i].fn(c);
      } catch (...) {
        r = std::numeric_limits<double>::infinity();
      }
      worst = std::max(worst, r);
    }
    const bool ok = worst <= tolerance;
    rep.identities.push_back({ids[i].name, worst, tolerance, ok});
    rep.all_pass = rep.all_pass && ok;
  }
  return rep;
}

}  // namespace mcliff::verify
