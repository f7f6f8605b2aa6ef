#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "superfast/errors.hpp"
#include "superfast/superfast_encoding.hpp"

using namespace superfast;
using oracle::CMatrix;

namespace {

using AFn = std::function<CMatrix(ModeIndex, ModeIndex)>;
using BFn = std::function<CMatrix(ModeIndex)>;

// Encoded term images written against abstract A and B operators.
CMatrix table_image(const ClassifiedTerm& t, std::size_t dim, const AFn& A, const BFn& B,
                    const EdgePairing* pairing) {
  const oracle::C i{0, 1};
  const CMatrix one = CMatrix::identity(dim);
  auto om = [&](ModeIndex v) { return one + oracle::scaled(B(v), -1.0); };
  auto hop = [&](ModeIndex a, ModeIndex b) {
    return oracle::scaled(A(a, b) * B(b) + B(a) * A(a, b), -0.5 * i);
  };
  const double c = t.coefficient;
  const auto& x = t.indices;
  switch (t.kind) {
    case TermKind::Number: return oracle::scaled(om(x[0]), 0.5 * c);
    case TermKind::CoulombExchange: return oracle::scaled(om(x[0]) * om(x[1]), 0.25 * c);
    case TermKind::Excitation: return oracle::scaled(hop(x[0], x[1]), c);
    case TermKind::NumberExcitation: return oracle::scaled(hop(x[0], x[2]) * om(x[1]), 0.5 * c);
    case TermKind::PairCreation:
      return oracle::scaled(A(x[0], x[1]) * B(x[1]) + oracle::scaled(B(x[0]) * A(x[0], x[1]), -1.0),
                            0.5 * i * c);
    case TermKind::DoubleExcitation: {
      const auto [a, b, k, l] = x;
      CMatrix poly = oracle::scaled(one, -1.0);
      poly = poly + oracle::scaled(B(a) * B(b), -1.0) + B(a) * B(k) + B(a) * B(l) + B(b) * B(k) +
             B(b) * B(l) + oracle::scaled(B(k) * B(l), -1.0) +
             oracle::scaled(B(a) * B(b) * B(k) * B(l), -1.0);
      const CMatrix aa = pairing ? oracle::scaled(A(pairing->first.first, pairing->first.second) *
                                                       A(pairing->second.first, pairing->second.second),
                                                   pairing->sign)
                                 : A(a, b) * A(k, l);
      return oracle::scaled(aa * poly, c / 8.0);
    }
  }
  return one;
}

// Majorana operators c_{2j} = a_j + a_j^, c_{2j+1} = -i (a_j - a_j^) in the
// occupation basis, and A, B built from them.
struct MajoranaRep {
  std::size_t modes;
  std::vector<CMatrix> even, odd;
  explicit MajoranaRep(std::size_t n) : modes(n) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = oracle::ladder(n, j, false);
      const auto ad = oracle::ladder(n, j, true);
      even.push_back(a + ad);
      odd.push_back(oracle::scaled(a + oracle::scaled(ad, -1.0), oracle::C{0, -1}));
    }
  }
  CMatrix A(ModeIndex j, ModeIndex k) const { return oracle::scaled(even[j] * even[k], oracle::C{0, -1}); }
  CMatrix B(ModeIndex j) const { return oracle::scaled(even[j] * odd[j], oracle::C{0, -1}); }
};

ClassifiedTerm term(TermKind kind, std::array<ModeIndex, 4> idx, double c) {
  ClassifiedTerm t;
  t.kind = kind;
  t.indices = idx;
  t.coefficient = c;
  return t;
}

InteractionGraph random_connected_graph(std::mt19937& rng, std::size_t v, std::size_t e) {
  std::vector<Edge> edges;
  for (ModeIndex i = 1; i < v; ++i) {
    std::uniform_int_distribution<ModeIndex> d(0, i - 1);
    edges.emplace_back(d(rng), i);
  }
  std::uniform_int_distribution<ModeIndex> d(0, static_cast<ModeIndex>(v - 1));
  for (int guard = 0; guard < 1000 && InteractionGraph(v, edges).num_edges() < e; ++guard) {
    const ModeIndex a = d(rng), b = d(rng);
    if (a != b) edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  return InteractionGraph(v, edges);
}

}  // namespace

TEST_CASE("term image formulas reproduce the fermionic terms in the Majorana representation") {
  const std::size_t n = 4;
  const MajoranaRep rep(n);
  const AFn A = [&](ModeIndex j, ModeIndex k) { return rep.A(j, k); };
  const BFn B = [&](ModeIndex j) { return rep.B(j); };
  const std::vector<ClassifiedTerm> terms{
      term(TermKind::Number, {2}, 0.7),
      term(TermKind::CoulombExchange, {0, 3}, -0.4),
      term(TermKind::Excitation, {1, 3}, 0.9),
      term(TermKind::NumberExcitation, {0, 2, 3}, 0.35),
      term(TermKind::NumberExcitation, {1, 0, 2}, -0.6),
      term(TermKind::DoubleExcitation, {0, 1, 3, 2}, 0.45),
      term(TermKind::DoubleExcitation, {0, 2, 3, 1}, -0.3),
      term(TermKind::DoubleExcitation, {0, 3, 2, 1}, 0.2),
      term(TermKind::PairCreation, {1, 2}, 0.8),
  };
  for (const auto& t : terms) {
    CAPTURE(to_string(t.kind));
    const auto ref = oracle::fock_matrix(to_monomials(t), n);
    CHECK(oracle::max_diff(table_image(t, 16, A, B, nullptr), ref) < 1e-12);
  }
}

TEST_CASE("mixed-spin pairings are equal in the Majorana representation") {
  const MajoranaRep rep(4);
  const AFn A = [&](ModeIndex j, ModeIndex k) { return rep.A(j, k); };
  const BFn B = [&](ModeIndex j) { return rep.B(j); };
  // Blocked spins for two spatial orbitals: 0, 1 up and 2, 3 down.
  const std::vector<Spin> spins{Spin::Up, Spin::Up, Spin::Down, Spin::Down};
  for (auto idx : {std::array<ModeIndex, 4>{0, 2, 3, 1}, std::array<ModeIndex, 4>{0, 3, 2, 1},
                   std::array<ModeIndex, 4>{0, 1, 3, 2}}) {
    const auto t = term(TermKind::DoubleExcitation, idx, 1.0);
    const auto p = double_excitation_pairing(t, spins);
    CHECK(spins[p.first.first] == spins[p.first.second]);
    CHECK(spins[p.second.first] == spins[p.second.second]);
    const auto ref = oracle::fock_matrix(to_monomials(t), 4);
    CHECK(oracle::max_diff(table_image(t, 16, A, B, &p), ref) < 1e-12);
  }
}

TEST_CASE("term images equal the formulas over the library's edge and vertex operators") {
  std::mt19937 rng(12);
  const auto g = random_connected_graph(rng, 5, 8);
  const std::size_t dim = std::size_t{1} << g.num_qubits();
  const AFn A = [&](ModeIndex j, ModeIndex k) {
    if (!g.has_edge(j, k)) return CMatrix(dim);
    return oracle::sum_matrix(PauliOperatorSum(g.num_qubits(), {edge_operator(g, j, k)}));
  };
  const BFn B = [&](ModeIndex j) {
    return oracle::sum_matrix(PauliOperatorSum(g.num_qubits(), {vertex_operator(g, j)}));
  };
  for (const auto& [p, q] : g.edges()) {
    for (ModeIndex j = 0; j < 5; ++j) {
      if (j == p || j == q) continue;
      const auto t = term(TermKind::NumberExcitation, {p, j, q}, 0.4);
      CHECK(oracle::max_diff(oracle::sum_matrix(ose_term_image(g, t, {})), table_image(t, dim, A, B, nullptr)) < 1e-12);
    }
    const auto e = term(TermKind::Excitation, {p, q}, -1.1);
    CHECK(oracle::max_diff(oracle::sum_matrix(ose_term_image(g, e, {})), table_image(e, dim, A, B, nullptr)) < 1e-12);
    const auto pc = term(TermKind::PairCreation, {p, q}, 0.5);
    CHECK(oracle::max_diff(oracle::sum_matrix(ose_term_image(g, pc, {})), table_image(pc, dim, A, B, nullptr)) < 1e-12);
  }
  for (std::size_t a = 0; a < g.num_edges(); ++a) {
    for (std::size_t b = 0; b < g.num_edges(); ++b) {
      auto [i, j] = g.edges()[a];
      auto [l, k] = g.edges()[b];
      if (i == l || i == k || j == l || j == k || std::pair(i, j) > std::pair(l, k)) continue;
      const auto t = term(TermKind::DoubleExcitation, {i, j, k, l}, 0.3);
      CHECK(oracle::max_diff(oracle::sum_matrix(ose_term_image(g, t, {})), table_image(t, dim, A, B, nullptr)) < 1e-12);
    }
  }
  const auto n = term(TermKind::CoulombExchange, {1, 4}, 0.25);
  CHECK(oracle::max_diff(oracle::sum_matrix(ose_term_image(g, n, {})), table_image(n, dim, A, B, nullptr)) < 1e-12);
}

TEST_CASE("path graph operators") {
  const InteractionGraph g(3, {{1, 2}, {0, 1}});
  REQUIRE(g.num_qubits() == 2);
  CHECK(*g.edge_index(0, 1) == 0);
  CHECK(*g.edge_index(2, 1) == 1);
  CHECK(vertex_operator(g, 1).string() == PauliString::parse(2, "Z0 Z1"));
  const auto a01 = edge_operator(g, 0, 1);
  CHECK(a01.string() == PauliString::parse(2, "X0"));
  CHECK(a01.coefficient() == Complex{1.0, 0.0});
  const auto a12 = edge_operator(g, 1, 2);
  CHECK(a12.string() == PauliString::parse(2, "Z0 X1"));
  CHECK(edge_operator(g, 2, 1).coefficient() == Complex{-1.0, 0.0});
  CHECK_THROWS_AS(edge_operator(g, 0, 2), MissingEdgeError);
  CHECK(loop_stabilizers(g).empty());
}

TEST_CASE("graph construction validates its input") {
  CHECK_THROWS_AS(InteractionGraph(2, {{0, 0}}), ValidationError);
  CHECK_THROWS_AS(InteractionGraph(2, {{0, 2}}), IndexError);
  const InteractionGraph g(4, {{2, 0}, {0, 2}, {1, 3}});
  CHECK(g.num_edges() == 2);
  CHECK(g.edges()[0] == Edge{0, 2});
  CHECK(g.connected_components() == 2);
  CHECK(vertex_operator(InteractionGraph(1, {}), 0).string().is_identity());
}

TEST_CASE("edge and vertex operators obey the Majorana-pair algebra") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_connected_graph(rng, 6, 9);
    const auto nv = static_cast<ModeIndex>(g.num_vertices());
    for (ModeIndex i = 0; i < nv; ++i)
      for (ModeIndex j = 0; j < nv; ++j)
        CHECK(vertex_operator(g, i).string().commutes_with(vertex_operator(g, j).string()));
    for (const auto& [i, j] : g.edges()) {
      const auto a = edge_operator(g, i, j);
      CHECK(multiply(a, a).string().is_identity());
      CHECK(multiply(a, a).coefficient() == Complex{1.0, 0.0});
      for (ModeIndex k = 0; k < nv; ++k) {
        const bool anti = (i == k) != (j == k);
        CHECK(a.string().commutes_with(vertex_operator(g, k).string()) == !anti);
      }
      for (const auto& [k, l] : g.edges()) {
        if (Edge{i, j} == Edge{k, l}) continue;
        const int shared = (i == k) + (i == l) + (j == k) + (j == l);
        CHECK(a.string().commutes_with(edge_operator(g, k, l).string()) == (shared % 2 == 0));
      }
    }
  }
}

TEST_CASE("triangle stabilizer") {
  const InteractionGraph g(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto s = loop_stabilizers(g);
  REQUIRE(s.size() == 1);
  CHECK(std::abs(std::abs(s[0].coefficient().real()) - 1.0) < 1e-15);
  CHECK(s[0].coefficient().imag() == 0.0);
  // i^3 A_01 A_12 A_20 by hand
  const auto prod = multiply(multiply(edge_operator(g, 0, 1), edge_operator(g, 1, 2)), edge_operator(g, 2, 0));
  const Complex expected = Complex{0, -1} * prod.coefficient();
  CHECK(s[0].string() == prod.string());
  CHECK(std::abs(s[0].coefficient() - expected) < 1e-15);
  const auto sq = multiply(s[0], s[0]);
  CHECK(sq.string().is_identity());
  CHECK(sq.coefficient() == Complex{1.0, 0.0});
  for (ModeIndex v = 0; v < 3; ++v) CHECK(s[0].string().commutes_with(vertex_operator(g, v).string()));
  for (const auto& [p, q] : g.edges()) CHECK(s[0].string().commutes_with(edge_operator(g, p, q).string()));
}

TEST_CASE("stabilizer count equals the cycle rank") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_connected_graph(rng, 7, 11);
    CHECK(loop_stabilizers(g).size() == g.num_edges() - g.num_vertices() + g.connected_components());
  }
  std::vector<Edge> complete;
  for (ModeIndex i = 0; i < 6; ++i)
    for (ModeIndex j = i + 1; j < 6; ++j) complete.emplace_back(i, j);
  const InteractionGraph k6(6, complete);
  CHECK(loop_stabilizers(k6).size() == 10);
  CHECK(vertex_operator(k6, 3).string().weight() == 5);
}

TEST_CASE("interaction graph edges follow the term kinds") {
  ClassifiedHamiltonian h;
  h.num_modes = 6;
  h.terms = {term(TermKind::Number, {0}, 1.0), term(TermKind::CoulombExchange, {1, 2}, 1.0)};
  CHECK(build_interaction_graph(h).num_edges() == 0);
  h.terms.push_back(term(TermKind::Excitation, {0, 4}, 1.0));
  h.terms.push_back(term(TermKind::NumberExcitation, {1, 5, 3}, 1.0));
  h.terms.push_back(term(TermKind::DoubleExcitation, {0, 2, 5, 1}, 1.0));
  const auto g = build_interaction_graph(h);
  CHECK(g.has_edge(0, 4));
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 5));
  CHECK(g.num_edges() == 4);
  GraphOptions opt;
  opt.parity_ancilla = true;
  opt.ancilla_partner = 2;
  opt.extra_edges = {{3, 4}};
  const auto g2 = build_interaction_graph(h, opt);
  CHECK(g2.num_vertices() == 7);
  CHECK(g2.has_edge(2, 6));
  CHECK(g2.has_edge(3, 4));
}

TEST_CASE("encoded Hamiltonian is Hermitian and commutes with every loop stabilizer") {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = oracle::random_spatial(3, rng);
    const auto h = FermionHamiltonian::from_spatial_integrals(s.h1, s.h2, 0.0);
    const auto c = classify(h, 0.0);
    const auto g = build_interaction_graph(c);
    CHECK(g.num_edges() == 6);  // complete graph per spin sector
    for (const auto& [p, q] : g.edges()) CHECK(h.spins()[p] == h.spins()[q]);
    const auto q = ose_transform(c, g, kSimplifyEpsilon, 3);
    CHECK(q.num_qubits() == g.num_qubits());
    CHECK(has_real_coefficients(q));
    const auto stabs = loop_stabilizers(g);
    CHECK(stabs.size() == 2);
    for (const auto& st : stabs)
      for (const auto& t : q.terms()) CHECK(st.string().commutes_with(t.string()));
  }
}

TEST_CASE("thread count does not change the encoded Hamiltonian") {
  std::mt19937 rng(45);
  const auto s = oracle::random_spatial(3, rng);
  const auto c = classify(FermionHamiltonian::from_spatial_integrals(s.h1, s.h2, 0.0), 0.0);
  const auto g = build_interaction_graph(c);
  const auto a = ose_transform(c, g, kSimplifyEpsilon, 1);
  const auto b = ose_transform(c, g, kSimplifyEpsilon, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.terms()[i].string() == b.terms()[i].string());
    CHECK(std::abs(a.terms()[i].coefficient() - b.terms()[i].coefficient()) < 1e-12);
  }
}

TEST_CASE("missing edges are reported") {
  ClassifiedHamiltonian h;
  h.num_modes = 3;
  h.terms = {term(TermKind::Excitation, {0, 2}, 1.0)};
  CHECK_THROWS_AS(ose_transform(h, InteractionGraph(3, {{0, 1}})), MissingEdgeError);
}

TEST_CASE("isolated modes stay empty") {
  // With no edges B_0 = I, so n_0 = (1 - B_0)/2 vanishes.
  ClassifiedHamiltonian h;
  h.num_modes = 1;
  h.terms = {term(TermKind::Number, {0}, 3.0)};
  const auto q = ose_transform(h, build_interaction_graph(h));
  CHECK(q.num_qubits() == 0);
  CHECK(q.size() == 0);
}

TEST_CASE("parity ancilla") {
  const auto r = add_parity_ancilla(InteractionGraph(1, {}), 0);
  CHECK(r.graph.num_qubits() == 1);
  CHECK(r.ancilla == 1);
  const auto m = oracle::sum_matrix(r.pair_creation);
  CHECK(has_real_coefficients(r.pair_creation));
  // (a_0^ a_s^ + a_s a_0)^2 is the projector onto pair-empty or pair-full.
  const auto sq = m * m;
  CHECK(oracle::max_diff(sq * sq, sq) < 1e-12);
  CHECK_THROWS_AS(add_parity_ancilla(InteractionGraph(1, {}), 1), IndexError);

  ClassifiedHamiltonian h;
  h.num_modes = 2;
  h.terms = {term(TermKind::Number, {0}, 1.0), term(TermKind::Excitation, {0, 1}, 0.5)};
  GraphOptions opt;
  opt.parity_ancilla = true;
  const auto g = build_interaction_graph(h, opt);
  const auto bs = vertex_operator(g, 2);
  const auto q = ose_transform(h, g);
  for (const auto& t : q.terms()) CHECK(t.string().commutes_with(bs.string()));
}
