#pragma once

#include <vector>

#include "superfast/lattice_integrals.hpp"
#include "superfast/linalg.hpp"

namespace superfast {

enum class OrthogonalizerKind { Symmetric, Canonical };

/// Columns of X are the orthonormal functions expressed in the original
/// basis, X^T S X = I.
struct Orthogonalizer {
  Matrix x;  // m x k
  OrthogonalizerKind kind = OrthogonalizerKind::Symmetric;
  std::vector<double> dropped_eigenvalues;
};

/// Smallest overlap eigenvalue accepted by the symmetric orthogonalizer.
inline constexpr double kLinearDependenceFloor = 1e-10;
/// Default eigenvalue threshold for the canonical orthogonalizer.
inline constexpr double kCanonicalThreshold = 1e-8;

/// X = U s^{-1/2} U^T. Throws LinearDependenceError when an overlap
/// eigenvalue is below kLinearDependenceFloor; use the canonical variant then.
Orthogonalizer symmetric_orthogonalizer(const Matrix& overlap);

/// X = U s^{-1/2} over the eigenpairs with eigenvalue >= threshold, in
/// descending eigenvalue order. Throws EmptyBasisError when none survive.
Orthogonalizer canonical_orthogonalizer(const Matrix& overlap,
                                        double threshold = kCanonicalThreshold);

/// Integrals over an orthonormal spatial basis.
struct SpatialIntegrals {
  Matrix one_body;    // k x k
  Tensor4 two_body;   // chemist order (ij|kl)
  double constant = 0.0;
  Matrix overlap;     // X^T S X, identity up to round-off
};

/// h' = X^T h X, (ij|kl)' transformed on all four indices; the constant is
/// carried over unchanged.
SpatialIntegrals rotate_integrals(const RawIntegrals& raw, const Matrix& x,
                                  unsigned threads = 0);

}  // namespace superfast
