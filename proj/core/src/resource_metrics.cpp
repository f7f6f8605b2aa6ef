#include "superfast/resource_metrics.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "superfast/errors.hpp"
#include "superfast/fermion_hamiltonian.hpp"
#include "superfast/superfast_encoding.hpp"

namespace superfast {

namespace {

std::size_t choose2(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

}  // namespace

ResourceReport report(const PauliOperatorSum& s, std::string label) {
  ResourceReport r;
  r.label = std::move(label);
  r.qubits = s.num_qubits();
  r.terms = s.size();
  for (const auto& t : s.terms()) {
    const std::size_t w = tensor_weight(t);
    r.total_weight += w;
    r.max_weight = std::max(r.max_weight, w);
  }
  r.average_weight = r.terms == 0 ? 0.0 : static_cast<double>(r.total_weight) / static_cast<double>(r.terms);
  r.l1_norm = coefficient_l1_norm(s, true);
  r.l1_norm_no_identity = coefficient_l1_norm(s, false);
  return r;
}

std::string to_json(const ResourceReport& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["qubits"] = r.qubits;
  j["terms"] = r.terms;
  j["total_weight"] = r.total_weight;
  j["average_weight"] = r.average_weight;
  j["max_weight"] = r.max_weight;
  j["l1_norm"] = r.l1_norm;
  j["l1_norm_no_identity"] = r.l1_norm_no_identity;
  return j.dump();
}

QubitBounds qubit_bounds(std::span<const std::size_t> orbitals_per_atom) {
  if (orbitals_per_atom.empty()) throw ValidationError("qubit_bounds: no atoms given");
  QubitBounds b;
  std::size_t m = 0;
  for (std::size_t ma : orbitals_per_atom) {
    b.lower += 2 * choose2(ma);
    m += ma;
  }
  b.upper = 2 * choose2(m);
  b.jw = 2 * m;
  return b;
}

LatticeQubits lattice_scaling(int dimension, int side_length) {
  if (side_length < 2) throw ValidationError("lattice_scaling: N must be >= 2");
  const auto n = static_cast<std::size_t>(side_length);
  switch (dimension) {
    case 1: return {2 * n, 2 * (n - 1)};
    case 2: return {2 * n * n, 4 * (n * n - n)};
    case 3: return {2 * n * n * n, 6 * (n * n * n - n * n)};
    default: throw ValidationError("lattice_scaling: dimension must be 1, 2 or 3");
  }
}

ProbeSample complete_graph_probe(std::size_t modes) {
  if (modes < 4 || modes > 16 || modes % 2 != 0) {
    throw ValidationError("complete_graph_probe: M must be even and in [4, 16]");
  }
  const std::size_t m = modes / 2;
  Matrix h1(m, m, 1.0);
  Tensor4 h2(m);
  std::fill(h2.data().begin(), h2.data().end(), 1.0);
  const auto h = FermionHamiltonian::from_spatial_integrals(h1, h2, 0.0, SpinOrdering::Blocked);
  const auto classified = classify(h, 0.0);
  const auto graph = build_interaction_graph(classified);
  const auto r = report(ose_transform(classified, graph, kSimplifyEpsilon, 0), "ose");
  return {modes, r.qubits, r.max_weight, r.total_weight};
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw ValidationError("fit_line: need two or more paired points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw ValidationError("fit_line: x values are all equal");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (f.slope * x[i] + f.intercept);
    ss_res += e * e;
  }
  f.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  return f;
}

LinearFit fit_log_log(std::span<const double> x, std::span<const double> y) {
  std::vector<double> lx, ly;
  for (double v : x) lx.push_back(std::log(v));
  for (double v : y) ly.push_back(std::log(v));
  return fit_line(lx, ly);
}

const std::vector<Ae6Molecule>& ae6_molecules() {
  static const std::vector<Ae6Molecule> molecules = [] {
    auto repeat = [](std::vector<std::string> v, const std::string& el, int n) {
      for (int i = 0; i < n; ++i) v.push_back(el);
      return v;
    };
    return std::vector<Ae6Molecule>{
        {"Silane", repeat({"Si"}, "H", 4), 90, 156, 26},
        {"SiO", {"Si", "O"}, 92, 182, 28},
        {"Sulfur", {"S", "S"}, 180, 306, 36},
        {"Propyne", repeat({"C", "C", "C"}, "H", 4), 90, 342, 38},
        {"Glyoxal", {"C", "C", "H", "H", "O", "O"}, 120, 462, 44},
        {"Cyclobutane", repeat({"C", "C", "C", "C"}, "H", 8), 120, 756, 56},
    };
  }();
  return molecules;
}

std::size_t minimal_basis_orbitals(const std::string& element) {
  if (element == "H" || element == "He") return 1;
  static const char* first_row[] = {"Li", "Be", "B", "C", "N", "O", "F", "Ne"};
  static const char* second_row[] = {"Na", "Mg", "Al", "Si", "P", "S", "Cl", "Ar"};
  for (const char* e : first_row) {
    if (element == e) return 5;
  }
  for (const char* e : second_row) {
    if (element == e) return 9;
  }
  throw ValidationError("no minimal-basis orbital count for element '" + element + "'");
}

}  // namespace superfast
