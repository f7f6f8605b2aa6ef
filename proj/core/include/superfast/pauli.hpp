#pragma once

// Exact algebra of multi-qubit Pauli operators in the symplectic (x, z)
// bit representation. A factor on qubit q is
//   (x, z) = (0, 0) I, (1, 0) X, (0, 1) Z, (1, 1) Y.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace superfast {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char to_char(Pauli p);

/// Default epsilon for merging/dropping Pauli terms; unrelated to the
/// integral cutoff.
inline constexpr double kSimplifyEpsilon = 1e-12;

/// Tensor product of single-qubit Pauli factors, without coefficient.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t num_qubits);

  /// Builds from (qubit, factor) pairs; identity factors are ignored.
  PauliString(std::size_t num_qubits,
              std::initializer_list<std::pair<std::size_t, Pauli>> factors);

  /// Parses strings such as "X0 Z3 Y7"; an empty string is the identity.
  static PauliString parse(std::size_t num_qubits, const std::string& text);

  std::size_t num_qubits() const noexcept { return num_qubits_; }

  Pauli get(std::size_t qubit) const;
  void set(std::size_t qubit, Pauli p);

  /// Number of non-identity factors.
  std::size_t weight() const noexcept;
  bool is_identity() const noexcept;

  /// Non-identity factors in ascending qubit order.
  std::vector<std::pair<std::size_t, Pauli>> factors() const;

  /// True when the two strings commute as operators.
  bool commutes_with(const PauliString& other) const;

  std::span<const std::uint64_t> x_words() const noexcept { return x_; }
  std::span<const std::uint64_t> z_words() const noexcept { return z_; }

  std::string to_string() const;

  friend bool operator==(const PauliString& a, const PauliString& b) = default;

  /// Lexicographic order on the (index, letter) factor sequence.
  friend bool canonical_less(const PauliString& a, const PauliString& b);

 private:
  friend struct PauliStringHash;
  friend std::pair<int, PauliString> multiply_strings(const PauliString&,
                                                      const PauliString&);

  void check_qubit(std::size_t qubit) const;

  std::size_t num_qubits_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

struct PauliStringHash {
  std::size_t operator()(const PauliString& s) const noexcept;
};

/// Product a*b of two strings: returns (phase exponent k, string) such that
/// a*b = i^k * string.
std::pair<int, PauliString> multiply_strings(const PauliString& a,
                                             const PauliString& b);

/// One coefficient times a Pauli string.
class PauliTerm {
 public:
  PauliTerm() = default;
  PauliTerm(Complex coefficient, PauliString string)
      : coefficient_(coefficient), string_(std::move(string)) {}

  static PauliTerm identity(std::size_t num_qubits, Complex coefficient = 1.0) {
    return PauliTerm(coefficient, PauliString(num_qubits));
  }

  Complex coefficient() const noexcept { return coefficient_; }
  void set_coefficient(Complex c) noexcept { coefficient_ = c; }
  const PauliString& string() const noexcept { return string_; }
  std::size_t num_qubits() const noexcept { return string_.num_qubits(); }

  std::string to_string() const;

 private:
  Complex coefficient_{1.0, 0.0};
  PauliString string_;
};

/// Operator product a*b with the phase folded into the coefficient.
/// Throws DimensionMismatchError when the qubit counts differ.
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);

std::size_t tensor_weight(const PauliTerm& t) noexcept;

/// Sum of Pauli terms over a fixed number of qubits.
class PauliOperatorSum {
 public:
  PauliOperatorSum() = default;
  explicit PauliOperatorSum(std::size_t num_qubits) : num_qubits_(num_qubits) {}
  PauliOperatorSum(std::size_t num_qubits, std::vector<PauliTerm> terms);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  void add(PauliTerm term);
  void add(const PauliOperatorSum& other, Complex scale = 1.0);

  /// Product of two sums, term by term (not simplified).
  friend PauliOperatorSum operator*(const PauliOperatorSum& a,
                                    const PauliOperatorSum& b);

  std::string to_string() const;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

/// Merges like terms, drops |c| < eps and sorts canonically.
PauliOperatorSum simplify(const PauliOperatorSum& s,
                          double eps = kSimplifyEpsilon);

/// Sum of |c_j|; the identity term is included only when requested.
double coefficient_l1_norm(const PauliOperatorSum& s, bool include_identity);

/// True when every coefficient has |Im c| <= tol (all Pauli strings are
/// Hermitian, so this is Hermiticity of a simplified sum).
bool has_real_coefficients(const PauliOperatorSum& s, double tol = 1e-12);

/// Hash-map accumulator used by the transforms to merge terms as they are
/// produced.
class PauliAccumulator {
 public:
  explicit PauliAccumulator(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const noexcept { return num_qubits_; }

  void add(const PauliTerm& term, Complex scale = 1.0);
  void add(const PauliOperatorSum& sum, Complex scale = 1.0);

  /// Simplified, canonically ordered sum.
  PauliOperatorSum to_sum(double eps = kSimplifyEpsilon) const;

 private:
  std::size_t num_qubits_;
  std::unordered_map<PauliString, Complex, PauliStringHash> terms_;
};

}  // namespace superfast
