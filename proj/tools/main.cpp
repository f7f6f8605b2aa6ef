// superfast: lattice sweeps, integral-file transforms, qubit bounds,
// spectral verification, reference comparison and scaling probes.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superfast/errors.hpp"
#include "superfast/fcidump.hpp"
#include "superfast/lattice_integrals.hpp"
#include "superfast/basis_rotation.hpp"
#include "superfast/resource_metrics.hpp"
#include "superfast/spectral_oracle.hpp"
#include "superfast/sweep.hpp"

namespace sf = superfast;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

const std::vector<double> kPaperExponents{8.75, 7.00, 5.00, 3.00, 1.00};

sf::Mappings parse_mapping(const std::string& m) {
  if (m == "jw") return {true, false};
  if (m == "ose") return {false, true};
  return {true, true};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw sf::Error("cannot write " + out_path);
  out << text;
}

std::vector<sf::ReferenceRow> load_reference(const std::string& path) {
  if (std::filesystem::is_directory(path)) return sf::load_reference_dir(path);
  return sf::load_reference_csv(path);
}

std::string default_reference() { return (sf::data_directory() / "reference").string(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermion-to-qubit encoding resource comparison"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Hydrogen-lattice sweep over sizes and exponents");
  int dim = 1;
  std::vector<std::size_t> sizes;
  std::vector<double> exponents;
  double cutoff = sf::kDefaultCutoff;
  std::string rotation = "aos";
  std::string mapping = "both";
  std::string format = "csv";
  std::string reference;
  std::string out_path;
  unsigned jobs = 0;
  double tolerance = 0.10;
  double spacing = 1.0;
  sweep->add_option("--dim", dim, "Lattice dimension")->check(CLI::Range(1, 3));
  sweep->add_option("--sizes", sizes, "Atom counts (perfect d-th powers)")->delimiter(',');
  sweep->add_option("--exponents", exponents, "Gaussian exponents in bohr^-2")->delimiter(',');
  sweep->add_option("--cutoff", cutoff, "Integral cutoff")->check(CLI::NonNegativeNumber);
  sweep->add_option("--rotation", rotation, "Orthogonalization")->check(CLI::IsMember({"aos", "aoc"}));
  sweep->add_option("--mapping", mapping, "Encodings")->check(CLI::IsMember({"jw", "ose", "both"}));
  sweep->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--reference", reference, "Reference CSV file or directory to compare against");
  sweep->add_option("--tolerance", tolerance, "Relative tolerance on weight columns");
  sweep->add_option("--spacing", spacing, "Lattice spacing in angstrom");
  sweep->add_option("--out", out_path, "Output file (default stdout)");
  sweep->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  // transform
  auto* transform = app.add_subcommand("transform", "Encode a Hamiltonian read from an integral file");
  std::string fcidump;
  transform->add_option("fcidump", fcidump, "Integral file")->required()->check(CLI::ExistingFile);
  transform->add_option("--cutoff", cutoff, "Integral cutoff")->check(CLI::NonNegativeNumber);
  transform->add_option("--mapping", mapping, "Encodings")->check(CLI::IsMember({"jw", "ose", "both"}));
  transform->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  transform->add_option("--out", out_path, "Output file (default stdout)");
  transform->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Qubit bounds from per-atom orbital counts");
  std::vector<std::string> atoms;
  bounds->add_option("--atoms", atoms, "Element symbols, e.g. Si,O (default: AE6 set)")->delimiter(',');
  bounds->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  bounds->add_option("--out", out_path, "Output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Compare JW and OSE spectra on a small system");
  std::size_t size = 2;
  double exponent = 8.75;
  int ancilla = -1;
  double spectral_tol = 1e-8;
  verify->add_option("fcidump", fcidump, "Integral file (default: a lattice)")->check(CLI::ExistingFile);
  verify->add_option("--dim", dim, "Lattice dimension")->check(CLI::Range(1, 3));
  verify->add_option("--size", size, "Atom count");
  verify->add_option("--exponent", exponent, "Gaussian exponent in bohr^-2");
  verify->add_option("--cutoff", cutoff, "Integral cutoff")->check(CLI::NonNegativeNumber);
  verify->add_option("--ancilla", ancilla, "Attach a parity ancilla to this mode");
  verify->add_option("--tolerance", spectral_tol, "Maximum spectral deviation");

  // compare
  auto* compare = app.add_subcommand("compare", "Diff sweep results against reference tables");
  std::string input;
  compare->add_option("results", input, "CSV written by 'sweep' with both mappings")
      ->required()->check(CLI::ExistingFile);
  compare->add_option("--reference", reference, "Reference CSV file or directory");
  compare->add_option("--tolerance", tolerance, "Relative tolerance on weight columns");
  compare->add_option("--out", out_path, "Output file (default stdout)");

  // probe
  auto* probe = app.add_subcommand("probe", "Complete-graph OSE weight scaling");
  std::vector<std::size_t> modes{4, 6, 8, 10, 12, 14};
  probe->add_option("--modes", modes, "Even mode counts in [4, 16]")->delimiter(',');
  probe->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  probe->add_option("--out", out_path, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      sf::SweepConfig cfg;
      cfg.dimension = dim;
      cfg.sizes = sizes;
      if (cfg.sizes.empty()) {
        for (int n = 2; n <= (dim == 1 ? 10 : 4); n += 2) {
          cfg.sizes.push_back(static_cast<std::size_t>(std::pow(n, dim)));
        }
      }
      cfg.exponents = exponents.empty() ? kPaperExponents : exponents;
      cfg.cutoff = cutoff;
      cfg.rotation = rotation == "aoc" ? sf::Rotation::Canonical : sf::Rotation::Symmetric;
      cfg.mappings = parse_mapping(mapping);
      cfg.spacing_angstrom = spacing;
      cfg.jobs = jobs;
      const auto rows = sf::run_sweep(cfg);
      emit(format == "json" ? sf::to_json(rows) : sf::to_csv(rows), out_path);
      bool ok = true;
      for (const auto& r : rows) {
        if (!r.error.empty()) {
          std::cerr << "size " << r.size << " basis " << r.basis << ": " << r.error << '\n';
          ok = false;
        }
      }
      if (!reference.empty()) {
        const auto report = sf::compare_reference(rows, load_reference(reference), {tolerance});
        std::cerr << report.to_text();
        ok = ok && report.pass;
      }
      return ok ? kExitPass : kExitFail;
    }

    if (transform->parsed()) {
      const auto file = sf::read_fcidump(fcidump);
      const auto result = sf::run_pipeline(file.one_body, file.two_body, file.constant, cutoff,
                                           parse_mapping(mapping), jobs);
      std::vector<sf::ResourceReport> reports;
      if (result.jw) reports.push_back(sf::report(*result.jw, "jw"));
      if (result.ose) reports.push_back(sf::report(*result.ose, "ose"));
      std::ostringstream text;
      if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(nlohmann::ordered_json::parse(sf::to_json(r)));
        text << arr.dump(2) << '\n';
      } else {
        text << "mapping,qubits,terms,total_weight,average_weight,max_weight,l1_norm,l1_norm_no_identity\n";
        for (const auto& r : reports) {
          text << r.label << ',' << r.qubits << ',' << r.terms << ',' << r.total_weight << ','
               << r.average_weight << ',' << r.max_weight << ',' << r.l1_norm << ','
               << r.l1_norm_no_identity << '\n';
        }
      }
      emit(text.str(), out_path);
      return kExitPass;
    }

    if (bounds->parsed()) {
      struct Entry {
        std::string name;
        std::vector<std::size_t> orbitals;
        const sf::Ae6Molecule* table = nullptr;
      };
      std::vector<Entry> entries;
      if (atoms.empty()) {
        for (const auto& m : sf::ae6_molecules()) {
          Entry e{m.name, {}, &m};
          for (const auto& a : m.atoms) e.orbitals.push_back(sf::minimal_basis_orbitals(a));
          entries.push_back(std::move(e));
        }
      } else {
        Entry e{"custom", {}, nullptr};
        for (const auto& a : atoms) e.orbitals.push_back(sf::minimal_basis_orbitals(a));
        entries.push_back(std::move(e));
      }
      bool ok = true;
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      std::ostringstream text;
      text << "molecule,Q_U,Q_L,Q_JW,table_Q_U,table_Q_L,table_Q_JW\n";
      for (const auto& e : entries) {
        const auto b = sf::qubit_bounds(e.orbitals);
        nlohmann::ordered_json j{{"molecule", e.name}, {"Q_U", b.upper}, {"Q_L", b.lower}, {"Q_JW", b.jw}};
        text << e.name << ',' << b.upper << ',' << b.lower << ',' << b.jw;
        if (e.table) {
          ok = ok && b.upper == e.table->table_upper && b.jw == e.table->table_jw;
          j["table"] = {{"Q_U", e.table->table_upper}, {"Q_L", e.table->table_lower}, {"Q_JW", e.table->table_jw}};
          text << ',' << e.table->table_upper << ',' << e.table->table_lower << ',' << e.table->table_jw;
          if (b.lower != e.table->table_lower) {
            std::cerr << e.name << ": Q_L " << b.lower << " from the on-atom formula, table lists "
                      << e.table->table_lower << '\n';
          }
        } else {
          text << ",,,";
        }
        text << '\n';
        arr.push_back(std::move(j));
      }
      emit(format == "json" ? arr.dump(2) + "\n" : text.str(), out_path);
      return ok ? kExitPass : kExitFail;
    }

    if (verify->parsed()) {
      sf::Matrix h1;
      sf::Tensor4 h2;
      double constant = 0.0;
      if (!fcidump.empty()) {
        const auto file = sf::read_fcidump(fcidump);
        h1 = file.one_body;
        h2 = file.two_body;
        constant = file.constant;
      } else {
        sf::LatticeSpec spec;
        spec.dimension = dim;
        spec.side_length = sf::side_length_for(dim, size);
        spec.exponent = exponent;
        const auto raw = sf::compute_integrals(sf::build_lattice(spec), exponent);
        const auto rotated = sf::rotate_integrals(raw, sf::symmetric_orthogonalizer(raw.overlap).x);
        h1 = rotated.one_body;
        h2 = rotated.two_body;
        constant = rotated.constant;
      }
      const auto h = sf::apply_cutoff(
          sf::FermionHamiltonian::from_spatial_integrals(h1, h2, constant), cutoff);
      sf::GraphOptions options;
      if (ancilla >= 0) {
        options.parity_ancilla = true;
        options.ancilla_partner = static_cast<sf::ModeIndex>(ancilla);
      }
      const auto cmp = sf::sector_spectra_match(h, cutoff, options);
      std::printf("modes %zu  edges %zu  sector dim %zu  code dim %zu  multiplicity %zu\n",
                  h.num_modes() + (options.parity_ancilla ? 1 : 0), cmp.edges, cmp.jw_dimension,
                  cmp.code_dimension, cmp.multiplicity);
      std::printf("ground energy JW %.12f  OSE %.12f\n", cmp.jw_spectrum.front(), cmp.ose_spectrum.front());
      std::printf("max spectral deviation %.3e (tolerance %.1e)\n", cmp.deviation, spectral_tol);
      return cmp.deviation < spectral_tol ? kExitPass : kExitFail;
    }

    if (compare->parsed()) {
      const auto results = sf::load_reference_csv(input);
      std::vector<sf::SweepRow> rows;
      for (const auto& r : results) {
        sf::SweepRow row;
        row.dimension = r.dimension;
        row.basis = r.basis;
        row.size = r.size;
        row.jw = sf::ResourceReport{"jw", r.jw_qubits, 0, r.jw_total_weight, 0.0, 0, 0.0, 0.0};
        row.ose = sf::ResourceReport{"ose", r.bksf_qubits, 0, r.bksf_total_weight, 0.0, 0, 0.0, 0.0};
        rows.push_back(std::move(row));
      }
      const auto report = sf::compare_reference(
          rows, load_reference(reference.empty() ? default_reference() : reference), {tolerance});
      emit(report.to_text(), out_path);
      return report.pass ? kExitPass : kExitFail;
    }

    if (probe->parsed()) {
      std::vector<double> ms, maxw, totw;
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      std::ostringstream text;
      text << "modes,qubits,max_weight,total_weight\n";
      for (std::size_t m : modes) {
        const auto s = sf::complete_graph_probe(m);
        ms.push_back(static_cast<double>(m));
        maxw.push_back(static_cast<double>(s.max_weight));
        totw.push_back(static_cast<double>(s.total_weight));
        text << s.modes << ',' << s.qubits << ',' << s.max_weight << ',' << s.total_weight << '\n';
        arr.push_back({{"modes", s.modes}, {"qubits", s.qubits}, {"max_weight", s.max_weight},
                       {"total_weight", s.total_weight}});
      }
      if (ms.size() >= 2) {
        const auto lin = sf::fit_line(ms, maxw);
        const auto loglog = sf::fit_log_log(ms, totw);
        std::fprintf(stderr, "max weight ~ %.3f M + %.3f (R^2 %.4f); total weight slope %.3f\n",
                     lin.slope, lin.intercept, lin.r_squared, loglog.slope);
      }
      emit(format == "json" ? arr.dump(2) + "\n" : text.str(), out_path);
      return kExitPass;
    }
  } catch (const sf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitPass;
}
