#pragma once

// Closed-form integrals over normalized s-type Gaussians
//   phi_A(r) = (2 alpha / pi)^{3/4} exp(-alpha |r - A|^2)
// with one Gaussian per hydrogen atom. Lengths are in bohr, energies in
// hartree.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "superfast/linalg.hpp"

namespace superfast {

inline constexpr double kBohrPerAngstrom = 1.8897259886;

using Vec3 = std::array<double, 3>;

struct LatticeSpec {
  int dimension = 1;          // 1, 2 or 3
  int side_length = 2;        // atoms per edge, N
  double spacing_angstrom = 1.0;
  double exponent = 1.0;      // alpha in bohr^-2

  std::size_t atom_count() const;
  /// Throws ValidationError when a field is out of range.
  void validate() const;
};

struct RawIntegrals {
  Matrix overlap;
  Matrix core;               // kinetic + nuclear attraction
  Tensor4 eri;               // chemist order (ij|kl)
  double nuclear_repulsion = 0.0;
};

/// Rectilinear grid of N^d centers in bohr, nearest-neighbour distance equal
/// to the spacing, enumerated with the last coordinate fastest.
std::vector<Vec3> build_lattice(const LatticeSpec& spec);

/// F0(t) = integral_0^1 exp(-t u^2) du. Throws DomainError for t < 0.
double boys_f0(double t);

/// Overlap, kinetic, nuclear attraction (unit charges at every center) and
/// electron repulsion integrals. Throws GeometryError for coincident centers
/// and DomainError for alpha <= 0.
RawIntegrals compute_integrals(std::span<const Vec3> centers, double alpha,
                               unsigned threads = 0);

}  // namespace superfast
