#include "superfast/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "superfast/basis_rotation.hpp"
#include "superfast/errors.hpp"
#include "superfast/jordan_wigner.hpp"
#include "superfast/lattice_integrals.hpp"

#ifndef SUPERFAST_DEFAULT_DATA_DIR
#define SUPERFAST_DEFAULT_DATA_DIR "data"
#endif

namespace superfast {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    cell.erase(0, cell.find_first_not_of(" \t\r"));
    cell.erase(cell.find_last_not_of(" \t\r") + 1);
    out.push_back(cell);
  }
  return out;
}

unsigned resolve_jobs(unsigned jobs) {
  return jobs != 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

int side_length_for(int dimension, std::size_t atoms) {
  if (dimension < 1 || dimension > 3) throw ValidationError("dimension must be 1, 2 or 3");
  if (atoms < 1) throw ValidationError("size must be >= 1");
  const auto n = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(atoms), 1.0 / dimension)));
  std::size_t p = 1;
  for (int d = 0; d < dimension; ++d) p *= n;
  if (p != atoms) {
    throw ValidationError("size " + std::to_string(atoms) + " is not a perfect power of dimension " +
                          std::to_string(dimension));
  }
  return static_cast<int>(n);
}

std::string basis_label(double exponent) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", exponent);
  return buf;
}

void SweepConfig::validate() const {
  if (dimension < 1 || dimension > 3) throw ValidationError("dimension must be 1, 2 or 3");
  if (sizes.empty()) throw ValidationError("no sizes given");
  if (exponents.empty()) throw ValidationError("no exponents given");
  if (!(cutoff >= 0.0)) throw ValidationError("cutoff must be >= 0");
  if (!mappings.jw && !mappings.ose) throw ValidationError("no mapping selected");
  for (std::size_t s : sizes) side_length_for(dimension, s);
  for (double a : exponents) {
    if (!(a > 0.0)) throw ValidationError("exponents must be positive");
  }
}

PipelineResult run_pipeline(const Matrix& h1, const Tensor4& h2, double constant,
                            double cutoff, Mappings mappings, unsigned threads) {
  const auto h = apply_cutoff(
      FermionHamiltonian::from_spatial_integrals(h1, h2, constant, SpinOrdering::Blocked, cutoff),
      cutoff);
  PipelineResult out;
  out.classified = classify(h, cutoff);
  out.graph = build_interaction_graph(out.classified);
  // the same cutoff also trims the encoded coefficients
  const double eps = std::max(cutoff, kSimplifyEpsilon);
  if (mappings.jw) out.jw = jw_transform(out.classified, eps);
  if (mappings.ose) out.ose = ose_transform(out.classified, out.graph, eps, threads);
  return out;
}

SweepRow run_cell(int dimension, std::size_t size, double exponent, const SweepConfig& cfg,
                  unsigned threads) {
  SweepRow row;
  row.dimension = dimension;
  row.basis = basis_label(exponent);
  row.exponent = exponent;
  row.size = size;
  try {
    LatticeSpec spec;
    spec.dimension = dimension;
    spec.side_length = side_length_for(dimension, size);
    spec.spacing_angstrom = cfg.spacing_angstrom;
    spec.exponent = exponent;
    const auto centers = build_lattice(spec);
    const auto raw = compute_integrals(centers, exponent, threads);
    const Orthogonalizer x = cfg.rotation == Rotation::Symmetric
                                 ? symmetric_orthogonalizer(raw.overlap)
                                 : canonical_orthogonalizer(raw.overlap);
    const auto rotated = rotate_integrals(raw, x.x, threads);
    const auto result = run_pipeline(rotated.one_body, rotated.two_body, rotated.constant,
                                     cfg.cutoff, cfg.mappings, threads);
    if (result.jw) row.jw = report(*result.jw, "jw");
    if (result.ose) row.ose = report(*result.ose, "ose");
    row.stabilizers = result.graph.num_edges() + result.graph.connected_components() -
                      result.graph.num_vertices();
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  struct Cell {
    double exponent;
    std::size_t size;
  };
  std::vector<Cell> cells;
  for (double a : cfg.exponents) {
    for (std::size_t s : cfg.sizes) cells.push_back({a, s});
  }
  const unsigned jobs = resolve_jobs(cfg.jobs);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, cells.size()));
  const unsigned inner = std::max(1u, jobs / workers);

  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= cells.size()) return;
      rows[c] = run_cell(cfg.dimension, cells[c].size, cells[c].exponent, cfg, inner);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();
  return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "dim,basis,Size,JW_Qbts,BKSF_Qbts,JW_TWt,BKSF_TWt,"
         "JW_Terms,BKSF_Terms,JW_AvgWt,BKSF_AvgWt,JW_MaxWt,BKSF_MaxWt,"
         "JW_L1,BKSF_L1,Stabilizers,status\n";
  for (const auto& r : rows) {
    auto field = [&](const std::optional<ResourceReport>& rep, auto getter) {
      return rep ? getter(*rep) : std::string();
    };
    auto qubits = [](const ResourceReport& x) { return std::to_string(x.qubits); };
    auto total = [](const ResourceReport& x) { return std::to_string(x.total_weight); };
    auto terms = [](const ResourceReport& x) { return std::to_string(x.terms); };
    auto avg = [](const ResourceReport& x) { return format_double(x.average_weight); };
    auto max = [](const ResourceReport& x) { return std::to_string(x.max_weight); };
    auto l1 = [](const ResourceReport& x) { return format_double(x.l1_norm); };
    std::string status = r.error.empty() ? "ok" : "error: " + r.error;
    std::replace(status.begin(), status.end(), ',', ';');
    out << r.dimension << ',' << r.basis << ',' << r.size << ',' << field(r.jw, qubits) << ','
        << field(r.ose, qubits) << ',' << field(r.jw, total) << ',' << field(r.ose, total) << ','
        << field(r.jw, terms) << ',' << field(r.ose, terms) << ',' << field(r.jw, avg) << ','
        << field(r.ose, avg) << ',' << field(r.jw, max) << ',' << field(r.ose, max) << ','
        << field(r.jw, l1) << ',' << field(r.ose, l1) << ','
        << (r.error.empty() && r.ose ? std::to_string(r.stabilizers) : std::string()) << ','
        << status << '\n';
  }
  return out.str();
}

std::string to_json(const std::vector<SweepRow>& rows) {
  auto rep = [](const std::optional<ResourceReport>& r) -> nlohmann::ordered_json {
    if (!r) return nullptr;
    return nlohmann::ordered_json::parse(to_json(*r));
  };
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["dim"] = r.dimension;
    j["basis"] = r.basis;
    j["size"] = r.size;
    j["jw"] = rep(r.jw);
    j["ose"] = rep(r.ose);
    j["stabilizers"] = r.stabilizers;
    if (!r.error.empty()) j["error"] = r.error;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<ReferenceRow> load_reference_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::string line;
  std::size_t line_no = 0;
  std::map<std::string, std::size_t> column;
  std::vector<ReferenceRow> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split_csv_line(line);
    if (column.empty()) {
      for (std::size_t i = 0; i < cells.size(); ++i) column[cells[i]] = i;
      for (const char* need : {"dim", "basis", "Size", "JW_Qbts", "BKSF_Qbts", "JW_TWt", "BKSF_TWt"}) {
        if (!column.contains(need)) throw ParseError(std::string("missing column ") + need, line_no);
      }
      continue;
    }
    auto get = [&](const char* name) -> const std::string& {
      const std::size_t i = column.at(name);
      if (i >= cells.size()) throw ParseError("short row", line_no);
      return cells[i];
    };
    auto num = [&](const char* name) {
      try {
        return static_cast<std::size_t>(std::stoull(get(name)));
      } catch (const std::logic_error&) {
        throw ParseError(std::string("bad integer in column ") + name, line_no);
      }
    };
    ReferenceRow r;
    r.dimension = static_cast<int>(num("dim"));
    r.basis = get("basis");
    r.size = num("Size");
    r.jw_qubits = num("JW_Qbts");
    r.bksf_qubits = num("BKSF_Qbts");
    r.jw_total_weight = num("JW_TWt");
    r.bksf_total_weight = num("BKSF_TWt");
    out.push_back(r);
  }
  return out;
}

std::vector<ReferenceRow> load_reference_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".csv") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<ReferenceRow> out;
  for (const auto& f : files) {
    auto part = load_reference_csv(f);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("SUPERFAST_DATA_DIR"); env && *env) return env;
  return SUPERFAST_DEFAULT_DATA_DIR;
}

ComparisonReport compare_reference(const std::vector<SweepRow>& rows,
                                   const std::vector<ReferenceRow>& reference,
                                   const CompareTolerance& tolerance) {
  ComparisonReport out;
  for (const auto& r : rows) {
    RowComparison c;
    c.dimension = r.dimension;
    c.basis = r.basis;
    c.size = r.size;
    const auto ref = std::find_if(reference.begin(), reference.end(), [&](const ReferenceRow& x) {
      return x.dimension == r.dimension && x.basis == r.basis && x.size == r.size;
    });
    if (!r.error.empty()) {
      c.covered = ref != reference.end();
      c.pass = false;
      c.note = "computation failed: " + r.error;
    } else if (ref == reference.end()) {
      c.covered = false;
      c.note = "no reference row";
      ++out.uncovered;
    } else {
      c.covered = true;
      auto rel = [](long long delta, std::size_t refv) {
        return refv == 0 ? (delta == 0 ? 0.0 : 1.0) : std::abs(static_cast<double>(delta)) / static_cast<double>(refv);
      };
      if (r.jw) {
        c.jw_qubits_match = r.jw->qubits == ref->jw_qubits;
        c.jw_weight_delta = static_cast<long long>(r.jw->total_weight) - static_cast<long long>(ref->jw_total_weight);
        c.jw_weight_relative = rel(c.jw_weight_delta, ref->jw_total_weight);
        c.pass = c.pass && c.jw_qubits_match && c.jw_weight_relative <= tolerance.weight_relative;
      }
      if (r.ose) {
        c.bksf_qubits_match = r.ose->qubits == ref->bksf_qubits;
        c.bksf_weight_delta = static_cast<long long>(r.ose->total_weight) - static_cast<long long>(ref->bksf_total_weight);
        c.bksf_weight_relative = rel(c.bksf_weight_delta, ref->bksf_total_weight);
        c.pass = c.pass && c.bksf_qubits_match && c.bksf_weight_relative <= tolerance.weight_relative;
      }
    }
    out.pass = out.pass && c.pass;
    out.rows.push_back(std::move(c));
  }
  return out;
}

std::string ComparisonReport::to_text() const {
  std::ostringstream out;
  out << "dim basis  size  JW_Qbts BKSF_Qbts   dJW_TWt (rel)        dBKSF_TWt (rel)      result\n";
  for (const auto& c : rows) {
    char buf[256];
    if (!c.covered || !c.note.empty()) {
      std::snprintf(buf, sizeof buf, "%-3d %-5s %5zu  %s\n", c.dimension, c.basis.c_str(), c.size,
                    c.note.c_str());
    } else {
      std::snprintf(buf, sizeof buf, "%-3d %-5s %5zu  %-7s %-9s %+8lld (%6.2f%%)   %+8lld (%6.2f%%)   %s\n",
                    c.dimension, c.basis.c_str(), c.size, c.jw_qubits_match ? "ok" : "DIFF",
                    c.bksf_qubits_match ? "ok" : "DIFF", c.jw_weight_delta, 100.0 * c.jw_weight_relative,
                    c.bksf_weight_delta, 100.0 * c.bksf_weight_relative, c.pass ? "pass" : "FAIL");
    }
    out << buf;
  }
  out << (pass ? "overall: pass" : "overall: FAIL");
  if (uncovered != 0) out << " (" << uncovered << " rows without reference)";
  out << '\n';
  return out.str();
}

}  // namespace superfast
