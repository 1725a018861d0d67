#include <cmath>
#include <vector>

#include "mcliff/hodge.hpp"
#include "mcliff/random.hpp"
#include "support.hpp"

using namespace mcliff;
using testsup::check_close;

namespace {

MetricExtensor diag_metric(std::vector<double> d) {
  return MetricExtensor(LinearExtensor::diagonal(d));
}

}  // namespace

TEST_CASE("standard volume of the fiducial frame") {
  const Multivector tau = std_tau(BasisPair::fiducial(3));
  CHECK(tau == Multivector::blade(3, 7));
  check_close(b_scalar(tau, tau), 1.0, 1e-14);
}

TEST_CASE("scaled and reordered frames normalize with orientation") {
  // Uniformly scaled frame: same orientation, unit volume.
  const BasisPair scaled = BasisPair::from_extensor(
      LinearExtensor::diagonal(std::vector<double>{2.0, 2.0}));
  check_close(std_tau(scaled), Multivector::blade(2, 3), 1e-12);

  // Swapped columns: negative orientation.
  const double rows[4] = {0.0, 1.0, 1.0, 0.0};
  const BasisPair swapped =
      BasisPair::from_extensor(LinearExtensor::from_row_major(2, rows));
  check_close(std_tau(swapped), -1.0 * Multivector::blade(2, 3), 1e-12);
}

TEST_CASE("std_tau rejects a pair that is not b reciprocal") {
  BasisPair bad = BasisPair::fiducial(2);
  bad.upper = bad.upper * 2.0;
  CHECK_THROWS_AS(std_tau(bad), invalid_basis);
}

TEST_CASE("standard duality on the plane") {
  const Multivector tau = std_tau(BasisPair::fiducial(2));
  const Multivector e1 = Multivector::blade(2, 1);
  const Multivector e2 = Multivector::blade(2, 2);
  const Multivector e12 = Multivector::blade(2, 3);
  const Multivector one = Multivector::scalar(2, 1.0);
  CHECK(std_hodge(e1, tau) == e2);
  CHECK(std_hodge(e2, tau) == -e1);
  CHECK(std_hodge(one, tau) == e12);
  CHECK(std_hodge(e12, tau) == one);
}

TEST_CASE("standard duality round trips and preserves the scalar product") {
  rnd::Rng rng(103);
  for (int n = 1; n <= 5; ++n) {
    const Multivector tau = std_tau(BasisPair::fiducial(n));
    for (int trial = 0; trial < 10; ++trial) {
      const Multivector x = rnd::random_multivector(rng, n);
      const Multivector y = rnd::random_multivector(rng, n);
      check_close(std_hodge_inv(std_hodge(x, tau), tau), x, 1e-12);
      check_close(std_hodge(std_hodge_inv(x, tau), tau), x, 1e-12);
      check_close(b_scalar(std_hodge(x, tau), std_hodge(y, tau)), b_scalar(x, y),
                  1e-12);
    }
    // Same grade pairs: X wedge (star Y) = (X . Y) tau.
    for (int k = 0; k <= n; ++k) {
      const Multivector x = rnd::random_homogeneous(rng, n, k);
      const Multivector y = rnd::random_homogeneous(rng, n, k);
      check_close(wedge(x, std_hodge(y, tau)), b_scalar(x, y) * tau, 1e-12);
    }
  }
}

TEST_CASE("metric volume carries the determinant weight") {
  const MetricExtensor g = diag_metric({2.0, 3.0});
  const VolumeData vol = volume_data(g, BasisPair::fiducial(2));
  check_close(vol.tau, Multivector::blade(2, 3), 1e-12);
  check_close(vol.tau_g, std::sqrt(6.0) * Multivector::blade(2, 3), 1e-12);
  check_close(vol.det_g, 6.0, 1e-12);
  CHECK(vol.q == 0);
  // Fundamental property: tau_g ._g−1 tau_g = (−1)^q.
  check_close(g_inv_scalar(g, vol.tau_g, vol.tau_g), 1.0, 1e-12);

  const MetricExtensor lor = diag_metric({1.0, -1.0, -1.0, -1.0});
  const VolumeData lvol = volume_data(lor, BasisPair::fiducial(4));
  check_close(g_inv_scalar(lor, lvol.tau_g, lvol.tau_g), -1.0, 1e-12);
}

TEST_CASE("metric duality on the minkowski plane") {
  const MetricExtensor g = diag_metric({1.0, -1.0});
  const Multivector e1 = Multivector::blade(2, 1);
  const Multivector e2 = Multivector::blade(2, 2);
  check_close(metric_hodge(g, e1), e2, 1e-12);
  check_close(metric_hodge(g, e2), e1, 1e-12);
  // Round trip through the explicit inverse map.
  check_close(metric_hodge_inv(g, metric_hodge(g, e1)), e1, 1e-12);
  check_close(metric_hodge_inv(g, metric_hodge(g, e2)), e2, 1e-12);
}

TEST_CASE("metric duality round trips on random metrics") {
  rnd::Rng rng(107);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const int p = rng.uniform_int(0, n);
      const MetricExtensor g =
          MetricExtensor(rnd::random_metric_matrix(rng, n, p, n - p));
      const Multivector x = rnd::random_multivector(rng, n);
      check_close(metric_hodge_inv(g, metric_hodge(g, x)), x, 1e-9);
      check_close(metric_hodge(g, metric_hodge_inv(g, x)), x, 1e-9);
    }
  }
}

TEST_CASE("relation to the standard map") {
  const MetricExtensor g = diag_metric({2.0, 3.0});
  const Multivector e1 = Multivector::blade(2, 1);
  const HodgePair hp = hodge_relation_standard(g, e1);
  // Both sides equal (3/sqrt(6)) e2.
  check_close(hp.lhs, (3.0 / std::sqrt(6.0)) * Multivector::blade(2, 2), 1e-12);
  check_close(hp.rhs, hp.lhs, 1e-12);

  rnd::Rng rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(2, 5);
    const int p = rng.uniform_int(0, n);
    const MetricExtensor h =
        MetricExtensor(rnd::random_metric_matrix(rng, n, p, n - p));
    const Multivector x = rnd::random_multivector(rng, n);
    const HodgePair rel = hodge_relation_standard(h, x);
    check_close(rel.lhs, rel.rhs, 1e-9);
  }
}

TEST_CASE("relation to the gauge map") {
  const MetricExtensor g = diag_metric({4.0, 9.0});
  const Multivector e1 = Multivector::blade(2, 1);
  const HodgePair hp = hodge_relation_gauge(g, e1);
  check_close(hp.lhs, 1.5 * Multivector::blade(2, 2), 1e-12);
  check_close(hp.rhs, hp.lhs, 1e-12);

  rnd::Rng rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(2, 5);
    const int p = rng.uniform_int(0, n);
    const MetricExtensor h =
        MetricExtensor(rnd::random_metric_matrix(rng, n, p, n - p));
    const Multivector x = rnd::random_multivector(rng, n);
    const HodgePair rel = hodge_relation_gauge(h, x);
    check_close(rel.lhs, rel.rhs, 1e-9);
    // The factorization form agrees with the metric form.
    const HodgePair rel2 = hodge_relation_gauge(h.gauge(), x);
    check_close(rel2.lhs, rel2.rhs, 1e-9);
  }
}

TEST_CASE("eta duality matches the metric map for sign metrics") {
  const MetricExtensor g = diag_metric({1.0, -1.0});
  const double eta[2] = {1.0, -1.0};
  rnd::Rng rng(127);
  for (int trial = 0; trial < 10; ++trial) {
    const Multivector x = rnd::random_multivector(rng, 2);
    check_close(eta_hodge(eta, x), metric_hodge(g, x), 1e-11);
  }
}

TEST_CASE("metric wedge characterization on same grade pairs") {
  rnd::Rng rng(131);
  const MetricExtensor g = diag_metric({2.0, -1.0, 3.0});
  const VolumeData vol = volume_data(g, BasisPair::fiducial(3));
  for (int k = 0; k <= 3; ++k) {
    const Multivector x = rnd::random_homogeneous(rng, 3, k);
    const Multivector y = rnd::random_homogeneous(rng, 3, k);
    // X wedge (star_g Y) = (X ._g−1 Y) tau_g.
    check_close(wedge(x, metric_hodge(g, y)),
                g_inv_scalar(g, x, y) * vol.tau_g, 1e-10);
  }
}
