#include <vector>

#include "mcliff/metric.hpp"
#include "mcliff/random.hpp"
#include "support.hpp"

using namespace mcliff;
using testsup::check_close;

namespace {

MetricExtensor diag_metric(std::vector<double> d) {
  return MetricExtensor(LinearExtensor::diagonal(d));
}

MetricExtensor random_metric(rnd::Rng& rng, int n) {
  const int p = rng.uniform_int(0, n);
  return MetricExtensor(rnd::random_metric_matrix(rng, n, p, n - p));
}

}  // namespace

TEST_CASE("construction validates and caches") {
  const MetricExtensor g = diag_metric({2.0, 3.0});
  CHECK(g.dim() == 2);
  CHECK(g.p() == 2);
  CHECK(g.q() == 0);
  check_close(g.det(), 6.0, 1e-12);
  check_close(g.inverse_matrix()(0, 0), 0.5, 1e-12);
  CHECK(g.eta()[0] == 1.0);

  const double asym[4] = {0.0, 1.0, 0.0, 0.0};
  CHECK_THROWS_AS(MetricExtensor(LinearExtensor::from_row_major(2, asym)), not_symmetric);
  CHECK_THROWS_AS(diag_metric({1.0, 0.0}), degenerate_metric);
}

TEST_CASE("identity metric reduces every product to the fiducial one") {
  const MetricExtensor g = MetricExtensor::identity(3);
  rnd::Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const Multivector x = rnd::random_multivector(rng, 3);
    const Multivector y = rnd::random_multivector(rng, 3);
    check_close(g_scalar(g, x, y), b_scalar(x, y), 1e-12);
    check_close(g_left_contract(g, x, y), left_contract(x, y), 1e-12);
    check_close(g_right_contract(g, x, y), right_contract(x, y), 1e-12);
    check_close(g_clifford(g, x, y), clifford_b(x, y), 1e-11);
  }
}

TEST_CASE("frozen products for diag(2,3)") {
  const MetricExtensor g = diag_metric({2.0, 3.0});
  const Multivector one = Multivector::scalar(2, 1.0);
  const Multivector e1 = Multivector::blade(2, 1);
  const Multivector e2 = Multivector::blade(2, 2);
  const Multivector e12 = Multivector::blade(2, 3);

  check_close(g_scalar(g, e1, e1), 2.0, 1e-12);
  check_close(g_scalar(g, e12, e12), 6.0, 1e-12);
  check_close(g_scalar(g, one + e1, e1), 2.0, 1e-12);
  check_close(g_scalar(g, e1, e2), 0.0, 1e-12);

  check_close(g_left_contract(g, e1, e12), 2.0 * e2, 1e-12);
  check_close(g_right_contract(g, e12, e2), 3.0 * e1, 1e-12);
  check_close(g_clifford(g, e1, e12), 2.0 * e2, 1e-11);
  check_close(g_clifford(g, e1, e1), 2.0 * one, 1e-11);
  check_close(g_clifford(g, e12, e12), -6.0 * one, 1e-11);
}

TEST_CASE("off diagonal metric symmetrizes vector products") {
  const double rows[4] = {2.0, 1.0, 1.0, 2.0};
  const MetricExtensor g(LinearExtensor::from_row_major(2, rows));
  const Multivector e1 = Multivector::blade(2, 1);
  const Multivector e2 = Multivector::blade(2, 2);
  // v o w + w o v = 2 g(v, w).
  const Multivector s = g_clifford(g, e1, e2) + g_clifford(g, e2, e1);
  check_close(s, Multivector::scalar(2, 2.0), 1e-11);
  check_close(g_clifford(g, e1, e1), Multivector::scalar(2, 2.0), 1e-11);
}

TEST_CASE("gauge route matches the axiom recursion oracle") {
  rnd::Rng rng(67);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const MetricExtensor g = random_metric(rng, n);
      const Multivector x = rnd::random_multivector(rng, n);
      const Multivector y = rnd::random_multivector(rng, n);
      check_close(g_clifford(g, x, y), g_clifford_oracle(g, x, y), 1e-10);
    }
  }
}

TEST_CASE("contractions are grade projections of the full product") {
  rnd::Rng rng(71);
  const MetricExtensor g = random_metric(rng, 4);
  for (int j = 0; j <= 4; ++j) {
    for (int k = j; k <= 4; ++k) {
      const Multivector x = rnd::random_homogeneous(rng, 4, j);
      const Multivector y = rnd::random_homogeneous(rng, 4, k);
      check_close(g_left_contract(g, x, y),
                  grade_project(g_clifford(g, x, y), k - j), 1e-10);
      if (j + k <= 4)
        check_close(wedge(x, y), grade_project(g_clifford(g, x, y), j + k), 1e-10);
    }
  }
}

TEST_CASE("inverse metric products use the inverse matrix") {
  const MetricExtensor g = diag_metric({2.0, 3.0});
  const Multivector e1 = Multivector::blade(2, 1);
  const Multivector e12 = Multivector::blade(2, 3);
  check_close(g_inv_scalar(g, e1, e1), 0.5, 1e-12);
  check_close(g_inv_scalar(g, e12, e12), 1.0 / 6.0, 1e-12);
  check_close(g_inv_left_contract(g, e1, e12), 0.5 * Multivector::blade(2, 2), 1e-12);

  // Against an explicitly inverted metric.
  rnd::Rng rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    const MetricExtensor h = random_metric(rng, 3);
    const MetricExtensor hinv(h.inverse_matrix());
    const Multivector x = rnd::random_multivector(rng, 3);
    const Multivector y = rnd::random_multivector(rng, 3);
    check_close(g_inv_scalar(h, x, y), g_scalar(hinv, x, y), 1e-10);
    check_close(g_inv_left_contract(h, x, y), g_left_contract(hinv, x, y), 1e-10);
    check_close(g_inv_right_contract(h, x, y), g_right_contract(hinv, x, y), 1e-10);
    check_close(g_inv_clifford(h, x, y), g_clifford(hinv, x, y), 1e-9);
  }
}

TEST_CASE("reciprocal bases pair to delta under the metric") {
  const MetricExtensor g = diag_metric({2.0, 3.0});
  const BasisPair e = reciprocal_bases(LinearExtensor::identity(2), g,
                                       BasisPair::fiducial(2));
  check_close(e.upper(0, 0), 0.5, 1e-12);
  check_close(e.upper(1, 1), 1.0 / 3.0, 1e-12);
  CHECK(g_reciprocity_residual(g, e) <= 1e-12);

  rnd::Rng rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    const MetricExtensor h = random_metric(rng, 4);
    const LinearExtensor f = rnd::random_invertible(rng, 4);
    const BasisPair pair = reciprocal_bases(f, h, BasisPair::fiducial(4));
    CHECK(g_reciprocity_residual(h, pair) <= 1e-9);
  }

  LinearExtensor singular(2);
  singular.at(0, 0) = 1.0;
  CHECK_THROWS_AS(
      reciprocal_bases(singular, g, BasisPair::fiducial(2)), singular_extensor);
}

TEST_CASE("expansion over reciprocal blades recovers the input") {
  rnd::Rng rng(83);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const MetricExtensor g = random_metric(rng, n);
      const LinearExtensor f = rnd::random_invertible(rng, n);
      const BasisPair e = reciprocal_bases(f, g, BasisPair::fiducial(n));
      const Multivector x = rnd::random_multivector(rng, n);
      check_close(expand(g, x, e, ExpandDirection::covariant, 1e-7), x, 1e-9);
      check_close(expand(g, x, e, ExpandDirection::contravariant, 1e-7), x, 1e-9);
    }
  }

  // A pair that is not metric reciprocal is rejected.
  const MetricExtensor g = diag_metric({2.0, 3.0});
  CHECK_THROWS_AS(expand(g, Multivector::blade(2, 1), BasisPair::fiducial(2),
                         ExpandDirection::covariant),
                  invalid_basis);
}

TEST_CASE("metric adjoint characterization") {
  rnd::Rng rng(89);
  const MetricExtensor id = MetricExtensor::identity(3);
  const LinearExtensor t = rnd::random_invertible(rng, 3);
  CHECK(norm_inf(metric_adjoint(t, id) - adjoint(t)) <= 1e-12);

  for (int trial = 0; trial < 10; ++trial) {
    const MetricExtensor g = random_metric(rng, 3);
    const LinearExtensor s = rnd::random_invertible(rng, 3);
    const LinearExtensor sa = metric_adjoint(s, g);
    for (int rep = 0; rep < 5; ++rep) {
      const Multivector x = rnd::random_vector(rng, 3);
      const Multivector y = rnd::random_vector(rng, 3);
      check_close(g_scalar(g, sa.apply(x), y), g_scalar(g, x, s.apply(y)), 1e-10);
    }
  }
}

TEST_CASE("outermorphism tables agree with one shot application") {
  rnd::Rng rng(97);
  const MetricExtensor g = random_metric(rng, 4);
  const Multivector x = rnd::random_multivector(rng, 4);
  check_close(g.ext().apply(x), outermorphism(g.matrix(), x), 1e-11);
  check_close(g.ext_inv().apply(x), outermorphism(g.inverse_matrix(), x), 1e-11);
  check_close(g.ext_h().apply(x), outermorphism(g.gauge().h, x), 1e-11);
  check_close(g.ext_h_inv().apply(x), outermorphism(inverse(g.gauge().h), x), 1e-11);
  check_close(g.ext_h_adj().apply(x), outermorphism(adjoint(g.gauge().h), x), 1e-11);
  check_close(g.ext_h_star().apply(x), outermorphism(star(g.gauge().h), x), 1e-11);
}
