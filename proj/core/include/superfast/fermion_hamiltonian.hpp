#pragma once

// Second-quantized Hamiltonians over spin orbitals
//
//   H = constant + sum_pq h_pq a_p^ a_q + sum_pqrs h_pqrs a_p^ a_q^ a_r a_s
//
// with the two-body tensor in physicist order. Built from chemist-order
// spatial integrals (ij|kl) as h_pqrs = 1/2 (ps|qr) times spin deltas.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "superfast/linalg.hpp"

namespace superfast {

enum class SpinOrdering {
  Interleaved,  // mode 2i = orbital i spin up, 2i+1 = spin down
  Blocked,      // modes [0, m) spin up, [m, 2m) spin down
};

enum class Spin : std::uint8_t { Up, Down };

using ModeIndex = std::uint32_t;

struct TwoBodyEntry {
  std::array<ModeIndex, 4> index;  // p, q, r, s of a_p^ a_q^ a_r a_s
  double value = 0.0;
};

/// Immutable fermionic Hamiltonian. Two-body entries are kept sparse,
/// sorted by index, without exact zeros.
class FermionHamiltonian {
 public:
  FermionHamiltonian() = default;

  /// Duplicate two-body indices are summed. `spins` is either empty or has
  /// one label per mode.
  FermionHamiltonian(std::size_t num_modes, double constant, Matrix one_body,
                     std::vector<TwoBodyEntry> two_body,
                     std::vector<Spin> spins = {});

  /// Spin expansion of real spatial integrals (h1 symmetric, h2 chemist
  /// order with 8-fold symmetry). Entries with |h_pqrs| < drop_below are not
  /// stored, which equals apply_cutoff(drop_below) on the two-body part.
  /// Throws ValidationError when h1 or h2 are asymmetric beyond 1e-10.
  static FermionHamiltonian from_spatial_integrals(
      const Matrix& h1, const Tensor4& h2, double constant,
      SpinOrdering ordering = SpinOrdering::Blocked, double drop_below = 0.0);

  std::size_t num_modes() const noexcept { return num_modes_; }
  double constant() const noexcept { return constant_; }
  const Matrix& one_body() const noexcept { return one_body_; }
  double one_body(std::size_t p, std::size_t q) const { return one_body_(p, q); }
  double two_body(ModeIndex p, ModeIndex q, ModeIndex r, ModeIndex s) const;
  const std::vector<TwoBodyEntry>& two_body_entries() const noexcept {
    return two_body_;
  }
  const std::vector<Spin>& spins() const noexcept { return spins_; }

  /// Checks h_pq = h_qp, h_pqrs = h_qpsr = h_srqp within tol and, when spins
  /// are known, spin conservation. Throws ValidationError.
  void validate(double tol = 1e-10) const;

 private:
  std::size_t num_modes_ = 0;
  double constant_ = 0.0;
  Matrix one_body_;
  std::vector<TwoBodyEntry> two_body_;
  std::vector<Spin> spins_;
};

/// Zeroes every one- and two-body entry with |value| < eps.
FermionHamiltonian apply_cutoff(const FermionHamiltonian& h, double eps);

enum class TermKind : std::uint8_t {
  Number,            // c n_i
  CoulombExchange,   // c a_i^ a_j^ a_j a_i,                        i < j
  Excitation,        // c (a_i^ a_j + a_j^ a_i),                    i < j
  NumberExcitation,  // c (a_i^ a_j^ a_j a_k + a_k^ a_j^ a_j a_i),  i < k
  DoubleExcitation,  // c (a_i^ a_j^ a_k a_l + a_l^ a_k^ a_j a_i),
                     //   i < j, l < k, (i, j) < (l, k)
  PairCreation,      // c (a_i^ a_j^ + a_j a_i),                    i < j
};

std::string to_string(TermKind kind);

/// Number of mode indices carried by a term of the given kind.
std::size_t arity(TermKind kind);

struct ClassifiedTerm {
  TermKind kind = TermKind::Number;
  std::array<ModeIndex, 4> indices{};  // first arity(kind) are meaningful
  double coefficient = 0.0;            // reordering signs folded in
  int sign = 1;         // reordering sign of the first contributing entry
  std::uint32_t source_entries = 0;  // tensor entries merged into this term

  std::span<const ModeIndex> index_span() const {
    return {indices.data(), arity(kind)};
  }
};

struct ClassifiedHamiltonian {
  std::size_t num_modes = 0;
  double constant = 0.0;
  std::vector<ClassifiedTerm> terms;  // sorted by (kind, indices)
  std::vector<Spin> spins;
};

/// Assigns every entry with |value| >= cutoff to one Hermitian term.
/// Entries that vanish identically (a_p^ a_p^, a_r a_r) are dropped.
ClassifiedHamiltonian classify(const FermionHamiltonian& h, double cutoff);

/// Explicit fermionic operator products; used to rebuild operators from
/// classified terms and by the Jordan-Wigner transform.
struct LadderOp {
  ModeIndex mode;
  bool dagger;
};

struct FermionMonomial {
  double coefficient = 0.0;
  std::vector<LadderOp> ops;  // applied right to left, written left to right
};

/// The term as a list of monomials, Hermitian partner included.
std::vector<FermionMonomial> to_monomials(const ClassifiedTerm& term);

/// Every monomial of the raw Hamiltonian (one entry per tensor element, the
/// constant as an empty product).
std::vector<FermionMonomial> to_monomials(const FermionHamiltonian& h);

/// Monomials of a classified Hamiltonian (constant included).
std::vector<FermionMonomial> to_monomials(const ClassifiedHamiltonian& h);

}  // namespace superfast
