#pragma once

// Lattice sweeps end to end (lattice, integrals, rotation, cutoff,
// classification, encodings, reports) and comparison with bundled
// reference tables.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "superfast/fermion_hamiltonian.hpp"
#include "superfast/linalg.hpp"
#include "superfast/pauli.hpp"
#include "superfast/resource_metrics.hpp"
#include "superfast/superfast_encoding.hpp"

namespace superfast {

enum class Rotation { Symmetric, Canonical };

struct Mappings {
  bool jw = true;
  bool ose = true;
};

inline constexpr double kDefaultCutoff = 1e-7;

struct SweepConfig {
  int dimension = 1;
  std::vector<std::size_t> sizes;  // atom counts, perfect d-th powers
  std::vector<double> exponents;
  double cutoff = kDefaultCutoff;
  Rotation rotation = Rotation::Symmetric;
  Mappings mappings;
  double spacing_angstrom = 1.0;
  unsigned jobs = 0;  // 0 = hardware concurrency

  /// Throws ValidationError on empty lists, bad dimension, negative cutoff
  /// or sizes that are not perfect powers.
  void validate() const;
};

/// Side length N with N^d = atoms. Throws ValidationError otherwise.
int side_length_for(int dimension, std::size_t atoms);

/// Exponent label with two decimals, e.g. "8.75".
std::string basis_label(double exponent);

struct SweepRow {
  int dimension = 1;
  std::string basis;
  double exponent = 0.0;
  std::size_t size = 0;
  std::optional<ResourceReport> jw;
  std::optional<ResourceReport> ose;
  std::size_t stabilizers = 0;
  std::string error;  // empty on success
};

struct PipelineResult {
  ClassifiedHamiltonian classified;
  InteractionGraph graph;
  std::optional<PauliOperatorSum> jw;
  std::optional<PauliOperatorSum> ose;
};

/// Spin expansion, cutoff, classification and the requested encodings.
/// Encoded Pauli terms with |coefficient| < cutoff are dropped as well.
PipelineResult run_pipeline(const Matrix& h1, const Tensor4& h2, double constant,
                            double cutoff, Mappings mappings, unsigned threads = 1);

/// One lattice cell; failures are reported in SweepRow::error.
SweepRow run_cell(int dimension, std::size_t size, double exponent, const SweepConfig& cfg,
                  unsigned threads = 1);

/// Rows ordered by (exponent as given, size as given) regardless of the
/// order in which workers finish.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// dim,basis,Size,JW_Qbts,BKSF_Qbts,JW_TWt,BKSF_TWt followed by extra
/// metrics and a status column.
std::string to_csv(const std::vector<SweepRow>& rows);
std::string to_json(const std::vector<SweepRow>& rows);

struct ReferenceRow {
  int dimension = 1;
  std::string basis;
  std::size_t size = 0;
  std::size_t jw_qubits = 0;
  std::size_t bksf_qubits = 0;
  std::size_t jw_total_weight = 0;
  std::size_t bksf_total_weight = 0;
};

/// Reads one reference CSV (header row required). Throws ParseError.
std::vector<ReferenceRow> load_reference_csv(const std::filesystem::path& path);

/// Every *.csv in a directory, in file-name order.
std::vector<ReferenceRow> load_reference_dir(const std::filesystem::path& dir);

/// SUPERFAST_DATA_DIR when set, otherwise the build-time data directory.
std::filesystem::path data_directory();

struct CompareTolerance {
  double weight_relative = 0.10;
};

struct RowComparison {
  int dimension = 1;
  std::string basis;
  std::size_t size = 0;
  bool covered = false;
  bool jw_qubits_match = true;
  bool bksf_qubits_match = true;
  long long jw_weight_delta = 0;
  long long bksf_weight_delta = 0;
  double jw_weight_relative = 0.0;
  double bksf_weight_relative = 0.0;
  bool pass = true;
  std::string note;
};

struct ComparisonReport {
  std::vector<RowComparison> rows;
  bool pass = true;
  std::size_t uncovered = 0;

  std::string to_text() const;
};

/// Qubit columns must match exactly and weight columns within the relative
/// tolerance. Rows without a reference are reported as uncovered and do not
/// fail the comparison; rows that failed to compute do.
ComparisonReport compare_reference(const std::vector<SweepRow>& rows,
                                   const std::vector<ReferenceRow>& reference,
                                   const CompareTolerance& tolerance = {});

}  // namespace superfast
