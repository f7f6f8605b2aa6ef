#pragma once

// Small-system ground truth: dense matrices of Pauli sums, code-space
// projection and spectrum comparison between the two encodings. Qubit q is
// bit q of the basis-state index.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "superfast/fermion_hamiltonian.hpp"
#include "superfast/pauli.hpp"
#include "superfast/superfast_encoding.hpp"

namespace superfast {

inline constexpr std::size_t kMaxDenseQubits = 12;

class DenseOperator {
 public:
  DenseOperator() = default;
  /// Zero matrix of dimension 2^num_qubits; SizeError above kMaxDenseQubits.
  explicit DenseOperator(std::size_t num_qubits);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  Complex trace() const;
  /// max |A_rc - conj(A_cr)|
  double hermiticity_error() const;

  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);
  friend double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

 private:
  std::size_t num_qubits_ = 0;
  std::size_t dim_ = 1;
  std::vector<Complex> data_{Complex{0.0, 0.0}};
};

DenseOperator dense_matrix(const PauliOperatorSum& s);
DenseOperator dense_matrix(const PauliTerm& t);

/// P|b> = phase |b'> for one Pauli string; needs num_qubits <= 64.
struct BasisImage {
  std::uint64_t state;
  Complex phase;
};
BasisImage apply_to_basis(const PauliString& p, std::uint64_t basis_state);

/// Sparse state as (basis index, amplitude) pairs.
using SparseState = std::vector<std::pair<std::uint64_t, Complex>>;

/// s|psi> without forming a matrix; like terms in the result are merged.
SparseState apply_operator(const PauliOperatorSum& s, const SparseState& psi);

/// prod_k (I + S_k) / 2. Throws AlgebraError when two stabilizers
/// anticommute, SizeError above the dense limit.
DenseOperator codespace_projector(std::span<const PauliTerm> stabilizers,
                                  std::size_t num_qubits);

/// Rank over GF(2) of the stabilizers' (x | z) vectors.
std::size_t symplectic_rank(std::span<const PauliTerm> stabilizers);

/// Ascending eigenvalues of a Hermitian matrix given row-major.
std::vector<double> hermitian_eigenvalues(std::span<const Complex> matrix,
                                          std::size_t dim);
std::vector<double> hermitian_eigenvalues(const DenseOperator& a);

struct SpectralComparison {
  double deviation = 0.0;  // max |lambda_jw - lambda_ose| after deflation
  std::size_t jw_dimension = 0;
  std::size_t code_dimension = 0;
  std::size_t multiplicity = 1;
  std::size_t edges = 0;
  std::vector<double> jw_spectrum;
  std::vector<double> ose_spectrum;
};

inline constexpr std::size_t kMaxSpectralModes = 12;
inline constexpr std::size_t kMaxSpectralQubits = 16;

/// Compares the JW spectrum on the sector where every connected component of
/// the interaction graph holds an even number of fermions (isolated modes
/// empty) with the OSE spectrum on the code space. Throws SizeError beyond
/// kMaxSpectralModes modes or kMaxSpectralQubits edges.
SpectralComparison sector_spectra_match(const FermionHamiltonian& h, double cutoff,
                                        const GraphOptions& options = {});

}  // namespace superfast
