#pragma once

// Superfast encoding: qubits live on the edges of an interaction graph whose
// vertices are the fermionic modes. With e_pq the qubit of edge {p, q},
//   B_i  = prod_{j in n(i)} Z_{e_ij}
//   A_pq = eps_pq X_{e_pq} prod_{l in n(p), l < q} Z_{e_lp}
//                          prod_{s in n(q), s < p} Z_{e_sq}
// with eps_pq = +1 for p < q and A_qp = -A_pq.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "superfast/fermion_hamiltonian.hpp"
#include "superfast/pauli.hpp"

namespace superfast {

using Edge = std::pair<ModeIndex, ModeIndex>;  // first < second

class InteractionGraph {
 public:
  InteractionGraph() = default;

  /// Pairs are normalized to p < q, sorted and deduplicated. Throws
  /// IndexError for out-of-range vertices and ValidationError for self-loops.
  InteractionGraph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return neighbors_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_qubits() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Qubit index of edge {p, q} in either orientation.
  std::optional<std::size_t> edge_index(ModeIndex p, ModeIndex q) const;
  bool has_edge(ModeIndex p, ModeIndex q) const { return edge_index(p, q).has_value(); }

  const std::vector<ModeIndex>& neighbors(ModeIndex v) const;
  std::size_t degree(ModeIndex v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;
  std::size_t connected_components() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<ModeIndex>> neighbors_;
};

struct GraphOptions {
  /// Appends an ancilla vertex s = num_modes joined to ancilla_partner.
  bool parity_ancilla = false;
  ModeIndex ancilla_partner = 0;
  /// Edges needed only for state preparation.
  std::vector<Edge> extra_edges;
};

/// Oriented edge pairs (a, b), (c, d) and a sign with
///   A_ij A_kl = sign A_ab A_cd
/// for a DoubleExcitation term (i, j, k, l). Pairs share a spin whenever the
/// spin labels allow it.
struct EdgePairing {
  Edge first;
  Edge second;
  int sign = 1;
};

EdgePairing double_excitation_pairing(const ClassifiedTerm& term,
                                      std::span<const Spin> spins);

/// Edges each term's image needs, unioned over all terms.
InteractionGraph build_interaction_graph(const ClassifiedHamiltonian& h,
                                         const GraphOptions& options = {});

/// Throws IndexError for i >= num_vertices.
PauliTerm vertex_operator(const InteractionGraph& g, ModeIndex i);

/// Throws MissingEdgeError when {p, q} is not an edge.
PauliTerm edge_operator(const InteractionGraph& g, ModeIndex p, ModeIndex q);

/// Image of one classified term (Hermitian partner included).
PauliOperatorSum ose_term_image(const InteractionGraph& g, const ClassifiedTerm& term,
                                std::span<const Spin> spins);

/// Image of the full Hamiltonian over g.num_qubits() qubits. Throws
/// MissingEdgeError when g lacks an edge some term needs.
PauliOperatorSum ose_transform(const ClassifiedHamiltonian& h, const InteractionGraph& g,
                               double eps = kSimplifyEpsilon, unsigned threads = 1);

/// One stabilizer i^p A_{j0 j1} ... A_{j(p-1) j0} per fundamental cycle of a
/// breadth-first spanning forest. The code space is their joint +1
/// eigenspace.
std::vector<PauliTerm> loop_stabilizers(const InteractionGraph& g);

struct AncillaResult {
  InteractionGraph graph;
  ModeIndex ancilla = 0;
  PauliOperatorSum pair_creation;  // image of a_k^ a_s^ + a_s a_k
};

/// Appends vertex s and edge {k, s}. Throws IndexError for k out of range.
AncillaResult add_parity_ancilla(const InteractionGraph& g, ModeIndex k);

}  // namespace superfast
