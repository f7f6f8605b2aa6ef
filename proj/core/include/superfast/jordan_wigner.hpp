#pragma once

// Jordan-Wigner encoding: one qubit per mode,
//   a_j^ = Z_0 ... Z_{j-1} (X_j - i Y_j) / 2
//   a_j  = Z_0 ... Z_{j-1} (X_j + i Y_j) / 2

#include <cstddef>

#include "superfast/fermion_hamiltonian.hpp"
#include "superfast/pauli.hpp"

namespace superfast {

/// Throws IndexError when j >= num_modes.
PauliOperatorSum jw_ladder(ModeIndex j, bool dagger, std::size_t num_modes);

/// Image of one ladder-operator product, simplified.
PauliOperatorSum jw_monomial(const FermionMonomial& m, std::size_t num_modes);

/// Image of a classified Hamiltonian (constant as identity term).
PauliOperatorSum jw_transform(const ClassifiedHamiltonian& h,
                              double eps = kSimplifyEpsilon);

/// classify(h, cutoff) followed by the transform above.
PauliOperatorSum jw_transform(const FermionHamiltonian& h, double cutoff,
                              double eps = kSimplifyEpsilon);

}  // namespace superfast
