#include <cmath>
#include <vector>

#include "mcliff/gauge.hpp"
#include "mcliff/metric.hpp"
#include "mcliff/random.hpp"
#include "support.hpp"

using namespace mcliff;
using testsup::check_close;

TEST_CASE("positive diagonal metric factors through its square root") {
  const double d[2] = {4.0, 9.0};
  const GaugeFactorization f = gauge_from_metric(MetricExtensor(LinearExtensor::diagonal(d)));
  CHECK(f.p == 2);
  CHECK(f.q == 0);
  CHECK(std::abs(f.h(0, 0) - 2.0) <= 1e-12);
  CHECK(std::abs(f.h(1, 1) - 3.0) <= 1e-12);
  CHECK(std::abs(f.h(0, 1)) <= 1e-12);
  CHECK(std::abs(f.h(1, 0)) <= 1e-12);
  CHECK(f.eta_diag() == std::vector<double>{1.0, 1.0});
  CHECK(factorization_residual(f, LinearExtensor::diagonal(d)) <= 1e-12);
}

TEST_CASE("mixed diagonal metric keeps axes and signature") {
  const double d[2] = {1.0, -1.0};
  const GaugeFactorization f = gauge_from_metric(MetricExtensor(LinearExtensor::diagonal(d)));
  CHECK(f.p == 1);
  CHECK(f.q == 1);
  CHECK(norm_inf(f.h - LinearExtensor::identity(2)) <= 1e-12);
  CHECK(f.eta_diag() == std::vector<double>{1.0, -1.0});
}

TEST_CASE("eigenvalue blocks consume positives then negatives in magnitude order") {
  // diag(-4, 25): positive eigenvalue 25 on axis 2, negative -4 on axis 1,
  // so h sends axis 2 to 5 b_1 and axis 1 to 2 b_2.
  const double d[2] = {-4.0, 25.0};
  const GaugeFactorization f = gauge_from_metric(MetricExtensor(LinearExtensor::diagonal(d)));
  CHECK(f.p == 1);
  CHECK(f.q == 1);
  CHECK(std::abs(f.h(0, 1) - 5.0) <= 1e-12);
  CHECK(std::abs(f.h(1, 0) - 2.0) <= 1e-12);
  CHECK(std::abs(f.h(0, 0)) <= 1e-12);
  CHECK(std::abs(f.h(1, 1)) <= 1e-12);
  CHECK(factorization_residual(f, LinearExtensor::diagonal(d)) <= 1e-12);
}

TEST_CASE("factorization reconstructs random metrics") {
  rnd::Rng rng(47);
  for (int n = 2; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p) {
      const LinearExtensor g = rnd::random_metric_matrix(rng, n, p, n - p);
      const GaugeFactorization f = gauge_from_metric(MetricExtensor(g));
      CHECK(f.p == p);
      CHECK(f.q == n - p);
      CHECK(factorization_residual(f, g) <= 1e-10);
    }
  }
}

TEST_CASE("fiducial eta and its signs") {
  const LinearExtensor eta = fiducial_eta(3, 1, 2);
  CHECK(eta(0, 0) == 1.0);
  CHECK(eta(1, 1) == -1.0);
  CHECK(eta(2, 2) == -1.0);
  CHECK(eta_signs(3, 1, 2) == std::vector<double>{1.0, -1.0, -1.0});
  CHECK_THROWS_AS(fiducial_eta(3, 2, 2), dimension_error);
}

TEST_CASE("boosts are eta orthogonal, shears are not") {
  const double c = std::cosh(0.7);
  const double s = std::sinh(0.7);
  const double boost_rows[4] = {c, s, s, c};
  const LinearExtensor boost = LinearExtensor::from_row_major(2, boost_rows);
  const LinearExtensor eta = fiducial_eta(2, 1, 1);
  CHECK(is_eta_orthogonal(boost, eta));

  const double shear_rows[4] = {1.0, 1.0, 0.0, 1.0};
  const LinearExtensor shear = LinearExtensor::from_row_major(2, shear_rows);
  CHECK(!is_eta_orthogonal(shear, eta));
}

TEST_CASE("composing with an eta orthogonal map keeps the metric") {
  rnd::Rng rng(53);
  const double d[2] = {1.0, -1.0};
  const LinearExtensor g = LinearExtensor::diagonal(d);
  const GaugeFactorization f = gauge_from_metric(MetricExtensor(g));
  const LinearExtensor l = rnd::random_eta_orthogonal(rng, 2, 1, 1);
  const GaugeFactorization f2 = compose_gauge(l, f);
  CHECK(factorization_residual(f2, g) <= 1e-10);

  const double shear_rows[4] = {1.0, 1.0, 0.0, 1.0};
  CHECK_THROWS_AS(compose_gauge(LinearExtensor::from_row_major(2, shear_rows), f),
                  not_eta_orthogonal);
}

TEST_CASE("gauge bases diagonalize the factored metric") {
  const double d[2] = {4.0, 9.0};
  const MetricExtensor g(LinearExtensor::diagonal(d));
  const BasisPair gb = gauge_bases(g.gauge(), BasisPair::fiducial(2));
  CHECK(norm_inf(gb.lower - g.gauge().h) <= 1e-12);
  check_close(gb.upper(0, 0), 0.5, 1e-12);
  check_close(gb.upper(1, 1), 1.0 / 3.0, 1e-12);
  CHECK(gb.b_reciprocity_residual() <= 1e-12);
}

TEST_CASE("metric from rho and l on the identity frame") {
  const double rho[2] = {2.0, 3.0};
  const LinearExtensor id = LinearExtensor::identity(2);

  const MetricExtensor g1 = metric_from_rho_l(rho, id, 2, 0);
  CHECK(norm_inf(g1.matrix() - LinearExtensor::diagonal(std::vector<double>{4.0, 9.0})) <= 1e-12);

  const MetricExtensor g2 = metric_from_rho_l(rho, id, 1, 1);
  CHECK(norm_inf(g2.matrix() - LinearExtensor::diagonal(std::vector<double>{4.0, -9.0})) <= 1e-12);
  CHECK(g2.p() == 1);
  CHECK(g2.q() == 1);
}

TEST_CASE("metric from rho and l satisfies the eigen relation") {
  rnd::Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(2, 5);
    const int p = rng.uniform_int(0, n);
    std::vector<double> rho(n);
    for (double& r : rho) {
      r = rng.uniform(0.4, 2.5);
      if (rng.uniform() < 0.5) r = -r;
    }
    const LinearExtensor l = rnd::random_orthogonal(rng, n);
    const MetricExtensor g = metric_from_rho_l(rho, l, p, n - p);
    const LinearExtensor la = adjoint(l);
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      // g(l_adj(b_k)) = +-rho_k^2 l_adj(b_k), positive block first.
      const Multivector v = la.apply(Multivector::blade(n, blade_mask{1} << k));
      const double lambda = (k < p ? 1.0 : -1.0) * rho[k] * rho[k];
      worst = std::max(worst, rel_residual(g.matrix().apply(v), lambda * v));
    }
    CHECK(worst <= 1e-10);
    // det g = (-1)^q prod rho^2.
    double want = (n - p) % 2 == 0 ? 1.0 : -1.0;
    for (double r : rho) want *= r * r;
    check_close(g.det(), want, 1e-9);
  }
}

TEST_CASE("metric from rho and l input guards") {
  const LinearExtensor id = LinearExtensor::identity(2);
  const double tiny[2] = {1e-13, 1.0};
  CHECK_THROWS_AS(metric_from_rho_l(tiny, id, 2, 0), zero_rho);

  const double rho[2] = {1.0, 1.0};
  const double shear_rows[4] = {1.0, 1.0, 0.0, 1.0};
  CHECK_THROWS_AS(
      metric_from_rho_l(rho, LinearExtensor::from_row_major(2, shear_rows), 2, 0),
      not_orthogonal);
}

TEST_CASE("factorization residual is relative") {
  const double d[2] = {4.0, 9.0};
  const LinearExtensor g = LinearExtensor::diagonal(d);
  GaugeFactorization f = gauge_from_metric(MetricExtensor(g));
  f.h.at(0, 0) += 1.0;  // breaks the factorization
  CHECK(factorization_residual(f, g) > 0.1);
}
