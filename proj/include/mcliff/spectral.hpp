#pragma once

#include <utility>

#include "mcliff/extensor.hpp"

namespace mcliff {

// Eigen data of a symmetric extensor. Ordering: positive eigenvalues first
// in descending order, then negatives by descending magnitude (zeros last);
// ties keep the rotation output order. Each eigenvector is unit length with
// its largest-magnitude component positive (first such index on ties).
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;  // [k] pairs with value k
  int p = 0;  // eigenvalues > 0
  int q = 0;  // eigenvalues < 0

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  Multivector eigenvector(int k) const;
};

// Cyclic Jacobi rotations; converged when the off-diagonal Frobenius norm
// drops below 1e-13 times the input Frobenius norm. Throws not_symmetric
// when ||s - adjoint(s)||_inf > 1e-10 * max(1, ||s||_inf), no_convergence
// after 30*n^2 rotations.
SpectralDecomposition eigen_sym(const LinearExtensor& s);

// Eigenvalues with |value| at or below this count as degenerate.
double degeneracy_threshold(const SpectralDecomposition& sd);

// (p, q) of a symmetric extensor; throws degenerate_metric when any
// eigenvalue magnitude falls at or below the degeneracy threshold.
std::pair<int, int> signature(const LinearExtensor& g);

double det_from_eigen(const SpectralDecomposition& sd);

}  // namespace mcliff
