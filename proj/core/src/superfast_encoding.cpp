#include "superfast/superfast_encoding.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <queue>
#include <thread>

#include "superfast/errors.hpp"

namespace superfast {

namespace {

constexpr Complex kI{0.0, 1.0};

Edge ordered(ModeIndex p, ModeIndex q) { return p < q ? Edge{p, q} : Edge{q, p}; }

PauliOperatorSum as_sum(const PauliTerm& t) {
  return PauliOperatorSum(t.num_qubits(), {t});
}

// I - B
PauliOperatorSum one_minus(const PauliTerm& b) {
  return PauliOperatorSum(b.num_qubits(),
                          {PauliTerm::identity(b.num_qubits()), PauliTerm(-b.coefficient(), b.string())});
}

// -i (A_ik B_k + B_i A_ik) / 2
PauliOperatorSum hopping(const InteractionGraph& g, ModeIndex i, ModeIndex k) {
  const PauliTerm a = edge_operator(g, i, k);
  PauliOperatorSum out(g.num_qubits());
  for (auto t : {multiply(a, vertex_operator(g, k)), multiply(vertex_operator(g, i), a)}) {
    t.set_coefficient(t.coefficient() * -0.5 * kI);
    out.add(std::move(t));
  }
  return out;
}

}  // namespace

InteractionGraph::InteractionGraph(std::size_t num_vertices, std::vector<Edge> edges)
    : neighbors_(num_vertices) {
  for (auto& e : edges) {
    if (e.first >= num_vertices || e.second >= num_vertices) {
      throw IndexError("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                       ") references a missing vertex");
    }
    if (e.first == e.second) throw ValidationError("self-loop on vertex " + std::to_string(e.first));
    e = ordered(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& [p, q] : edges_) {
    neighbors_[p].push_back(q);
    neighbors_[q].push_back(p);
  }
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());
}

std::optional<std::size_t> InteractionGraph::edge_index(ModeIndex p, ModeIndex q) const {
  const Edge e = ordered(p, q);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

const std::vector<ModeIndex>& InteractionGraph::neighbors(ModeIndex v) const {
  if (v >= neighbors_.size()) throw IndexError("vertex " + std::to_string(v) + " out of range");
  return neighbors_[v];
}

std::size_t InteractionGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& n : neighbors_) d = std::max(d, n.size());
  return d;
}

std::size_t InteractionGraph::connected_components() const {
  std::vector<bool> seen(num_vertices(), false);
  std::size_t count = 0;
  for (std::size_t root = 0; root < num_vertices(); ++root) {
    if (seen[root]) continue;
    ++count;
    std::vector<std::size_t> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (ModeIndex w : neighbors_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

EdgePairing double_excitation_pairing(const ClassifiedTerm& term, std::span<const Spin> spins) {
  if (term.kind != TermKind::DoubleExcitation) {
    throw ValidationError("edge pairing requested for a " + to_string(term.kind) + " term");
  }
  const auto [i, j, k, l] = term.indices;
  auto same = [&](ModeIndex a, ModeIndex b) { return spins.empty() || spins[a] == spins[b]; };
  // A_ij A_kl = A_il A_jk = -A_ik A_jl
  if (same(i, j)) return {{i, j}, {k, l}, 1};
  if (same(i, l)) return {{i, l}, {j, k}, 1};
  return {{i, k}, {j, l}, -1};
}

InteractionGraph build_interaction_graph(const ClassifiedHamiltonian& h,
                                         const GraphOptions& options) {
  std::vector<Edge> edges;
  for (const auto& t : h.terms) {
    const auto& x = t.indices;
    switch (t.kind) {
      case TermKind::Number:
      case TermKind::CoulombExchange:
        break;
      case TermKind::Excitation:
      case TermKind::PairCreation:
        edges.push_back(ordered(x[0], x[1]));
        break;
      case TermKind::NumberExcitation:
        edges.push_back(ordered(x[0], x[2]));
        break;
      case TermKind::DoubleExcitation: {
        const auto p = double_excitation_pairing(t, h.spins);
        edges.push_back(ordered(p.first.first, p.first.second));
        edges.push_back(ordered(p.second.first, p.second.second));
        break;
      }
    }
  }
  std::size_t vertices = h.num_modes;
  if (options.parity_ancilla) {
    if (options.ancilla_partner >= h.num_modes) throw IndexError("ancilla partner out of range");
    edges.emplace_back(options.ancilla_partner, static_cast<ModeIndex>(vertices));
    ++vertices;
  }
  edges.insert(edges.end(), options.extra_edges.begin(), options.extra_edges.end());
  return InteractionGraph(vertices, std::move(edges));
}

PauliTerm vertex_operator(const InteractionGraph& g, ModeIndex i) {
  PauliString s(g.num_qubits());
  for (ModeIndex j : g.neighbors(i)) s.set(*g.edge_index(i, j), Pauli::Z);
  return PauliTerm(1.0, std::move(s));
}

PauliTerm edge_operator(const InteractionGraph& g, ModeIndex p, ModeIndex q) {
  const auto e = g.edge_index(p, q);
  if (!e) {
    throw MissingEdgeError("edge (" + std::to_string(p) + "," + std::to_string(q) +
                           ") is not in the interaction graph");
  }
  const double eps = p < q ? 1.0 : -1.0;
  if (p > q) std::swap(p, q);
  PauliString s(g.num_qubits());
  for (ModeIndex l : g.neighbors(p)) {
    if (l < q) s.set(*g.edge_index(l, p), Pauli::Z);
  }
  for (ModeIndex r : g.neighbors(q)) {
    if (r < p) s.set(*g.edge_index(r, q), Pauli::Z);
  }
  s.set(*e, Pauli::X);
  return PauliTerm(eps, std::move(s));
}

PauliOperatorSum ose_term_image(const InteractionGraph& g, const ClassifiedTerm& term,
                                std::span<const Spin> spins) {
  const std::size_t n = g.num_qubits();
  const double c = term.coefficient;
  const auto& x = term.indices;
  PauliAccumulator acc(n);
  switch (term.kind) {
    case TermKind::Number:
      acc.add(one_minus(vertex_operator(g, x[0])), 0.5 * c);
      break;
    case TermKind::CoulombExchange:
      acc.add(one_minus(vertex_operator(g, x[0])) * one_minus(vertex_operator(g, x[1])), 0.25 * c);
      break;
    case TermKind::Excitation:
      acc.add(hopping(g, x[0], x[1]), c);
      break;
    case TermKind::NumberExcitation:
      acc.add(hopping(g, x[0], x[2]) * one_minus(vertex_operator(g, x[1])), 0.5 * c);
      break;
    case TermKind::DoubleExcitation: {
      const auto [i, j, k, l] = x;
      const auto pairing = double_excitation_pairing(term, spins);
      const PauliTerm aa = multiply(edge_operator(g, pairing.first.first, pairing.first.second),
                                    edge_operator(g, pairing.second.first, pairing.second.second));
      auto bb = [&](std::initializer_list<ModeIndex> vs) {
        PauliTerm t = PauliTerm::identity(n);
        for (ModeIndex v : vs) t = multiply(t, vertex_operator(g, v));
        return t;
      };
      PauliOperatorSum poly(n);
      poly.add(PauliTerm::identity(n, -1.0));
      const std::pair<double, PauliTerm> parts[] = {
          {-1.0, bb({i, j})}, {1.0, bb({i, k})},  {1.0, bb({i, l})},         {1.0, bb({j, k})},
          {1.0, bb({j, l})},  {-1.0, bb({k, l})}, {-1.0, bb({i, j, k, l})}};
      for (const auto& [s, t] : parts) poly.add(PauliTerm(s * t.coefficient(), t.string()));
      acc.add(as_sum(aa) * poly, pairing.sign * c / 8.0);
      break;
    }
    case TermKind::PairCreation: {
      // i (A_ij B_j - B_i A_ij) / 2
      const PauliTerm a = edge_operator(g, x[0], x[1]);
      acc.add(multiply(a, vertex_operator(g, x[1])), 0.5 * kI * c);
      acc.add(multiply(vertex_operator(g, x[0]), a), -0.5 * kI * c);
      break;
    }
  }
  return acc.to_sum(0.0);
}

PauliOperatorSum ose_transform(const ClassifiedHamiltonian& h, const InteractionGraph& g,
                               double eps, unsigned threads) {
  const std::size_t n = g.num_qubits();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(h.terms.size(), 1)));

  std::vector<PauliAccumulator> parts(threads, PauliAccumulator(n));
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned w) {
    try {
      for (std::size_t t = w; t < h.terms.size(); t += threads) {
        parts[w].add(ose_term_image(g, h.terms[t], h.spins));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker, w);
    worker(0);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  PauliAccumulator total(n);
  if (h.constant != 0.0) total.add(PauliTerm::identity(n, h.constant));
  for (const auto& p : parts) total.add(p.to_sum(0.0));
  return total.to_sum(eps);
}

std::vector<PauliTerm> loop_stabilizers(const InteractionGraph& g) {
  const std::size_t nv = g.num_vertices();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(nv, kNone);
  std::vector<std::size_t> depth(nv, 0);
  std::vector<bool> seen(nv, false);
  std::vector<bool> tree_edge(g.num_edges(), false);

  for (std::size_t root = 0; root < nv; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (ModeIndex w : g.neighbors(static_cast<ModeIndex>(v))) {
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = v;
        depth[w] = depth[v] + 1;
        tree_edge[*g.edge_index(static_cast<ModeIndex>(v), w)] = true;
        q.push(w);
      }
    }
  }

  std::vector<PauliTerm> out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (tree_edge[e]) continue;
    const auto [u, v] = g.edges()[e];
    // cycle u -> ... -> lca -> ... -> v -> u
    std::vector<std::size_t> up{u};
    std::vector<std::size_t> down{v};
    std::size_t a = u;
    std::size_t b = v;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        a = parent[a];
        up.push_back(a);
      } else {
        b = parent[b];
        down.push_back(b);
      }
    }
    down.pop_back();
    std::vector<std::size_t> cycle = up;
    cycle.insert(cycle.end(), down.rbegin(), down.rend());

    const std::size_t p = cycle.size();
    PauliTerm prod = PauliTerm::identity(g.num_qubits());
    for (std::size_t s = 0; s < p; ++s) {
      prod = multiply(prod, edge_operator(g, static_cast<ModeIndex>(cycle[s]),
                                          static_cast<ModeIndex>(cycle[(s + 1) % p])));
    }
    Complex phase{1.0, 0.0};
    for (std::size_t s = 0; s < p % 4; ++s) phase *= kI;
    const Complex c = phase * prod.coefficient();
    if (std::abs(c.imag()) > 1e-12 || std::abs(std::abs(c.real()) - 1.0) > 1e-12) {
      throw AlgebraError("loop operator does not reduce to a real unit coefficient");
    }
    out.emplace_back(std::round(c.real()), prod.string());
  }
  return out;
}

AncillaResult add_parity_ancilla(const InteractionGraph& g, ModeIndex k) {
  if (k >= g.num_vertices()) throw IndexError("ancilla partner out of range");
  AncillaResult out;
  out.ancilla = static_cast<ModeIndex>(g.num_vertices());
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(k, out.ancilla);
  out.graph = InteractionGraph(g.num_vertices() + 1, std::move(edges));
  ClassifiedTerm pair;
  pair.kind = TermKind::PairCreation;
  pair.indices = {k, out.ancilla, 0, 0};
  pair.coefficient = 1.0;
  out.pair_creation = ose_term_image(out.graph, pair, {});
  return out;
}

}  // namespace superfast
