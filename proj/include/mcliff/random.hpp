#pragma once

#include <cstdint>
#include <random>

#include "mcliff/extensor.hpp"

namespace mcliff::rnd {

// Distinct deterministic stream per (seed, stream) pair.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// mt19937_64 with a fixed bits-to-double mapping, so streams are identical
// across standard libraries (distribution classes are not pinned down).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int uniform_int(int lo, int hi);  // inclusive bounds

 private:
  std::mt19937_64 eng_;
};

Multivector random_multivector(Rng& r, int n, double amplitude = 1.0);
Multivector random_homogeneous(Rng& r, int n, int k, double amplitude = 1.0);
Multivector random_vector(Rng& r, int n, double amplitude = 1.0);

LinearExtensor random_orthogonal(Rng& r, int n);  // Givens product, det +-1
// rotation * diag(signed magnitudes in [smin, smax]) * rotation
LinearExtensor random_invertible(Rng& r, int n, double smin = 0.5,
                                 double smax = 2.0);
LinearExtensor random_symmetric(Rng& r, int n, double amplitude = 1.0);
// Symmetric with exact signature (p, q): Q^T diag(lambda) Q with eigenvalue
// magnitudes in [min_mag, max_mag].
LinearExtensor random_metric_matrix(Rng& r, int n, int p, int q,
                                    double min_mag = 0.3,
                                    double max_mag = 3.0);
// Product of in-block rotations and cross-block boosts with |rapidity|
// at most max_rapidity: preserves diag(+1 x p, -1 x q).
LinearExtensor random_eta_orthogonal(Rng& r, int n, int p, int q,
                                     double max_rapidity = 1.0);

}  // namespace mcliff::rnd
