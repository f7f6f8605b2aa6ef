#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "superfast/pauli.hpp"

namespace superfast {

struct ResourceReport {
  std::string label;
  std::size_t qubits = 0;
  std::size_t terms = 0;
  std::size_t total_weight = 0;
  double average_weight = 0.0;  // identity term counted with weight 0
  std::size_t max_weight = 0;
  double l1_norm = 0.0;             // identity included
  double l1_norm_no_identity = 0.0;
};

/// Metrics of a simplified operator sum.
ResourceReport report(const PauliOperatorSum& s, std::string label);

std::string to_json(const ResourceReport& r);

struct QubitBounds {
  std::size_t lower = 0;  // 2 sum_a C(M_a, 2), on-atom couplings only
  std::size_t upper = 0;  // 2 C(m, 2), complete graph per spin
  std::size_t jw = 0;     // 2 m
};

/// Orbital counts per atom. Throws ValidationError for an empty list.
QubitBounds qubit_bounds(std::span<const std::size_t> orbitals_per_atom);

struct LatticeQubits {
  std::size_t jw = 0;
  std::size_t ose = 0;
};

/// Qubit counts of an N^d lattice with nearest-neighbour couplings only.
/// Throws ValidationError for d outside 1..3 or N < 2.
LatticeQubits lattice_scaling(int dimension, int side_length);

struct ProbeSample {
  std::size_t modes = 0;
  std::size_t qubits = 0;
  std::size_t max_weight = 0;
  std::size_t total_weight = 0;
};

/// OSE weights of a Hamiltonian with every spatial integral equal to one,
/// which couples each spin sector into a complete graph. M must be even and
/// in [4, 16] (ValidationError otherwise).
ProbeSample complete_graph_probe(std::size_t modes);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least squares y = slope x + intercept. Throws ValidationError for fewer
/// than two points or mismatched lengths.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

/// Fit of log y against log x.
LinearFit fit_log_log(std::span<const double> x, std::span<const double> y);

/// Minimal-basis orbital counts of the AE6 molecules and the bounds table
/// values they are compared with.
struct Ae6Molecule {
  std::string name;
  std::vector<std::string> atoms;
  std::size_t table_lower = 0;
  std::size_t table_upper = 0;
  std::size_t table_jw = 0;
};

const std::vector<Ae6Molecule>& ae6_molecules();

/// Orbitals per atom in a minimal basis: H 1, first-row 5, second-row 9.
/// Throws ValidationError for unsupported elements.
std::size_t minimal_basis_orbitals(const std::string& element);

}  // namespace superfast
