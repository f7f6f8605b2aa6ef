#include "superfast/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include "superfast/errors.hpp"

namespace superfast {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t num_qubits) {
  return (num_qubits + kWordBits - 1) / kWordBits;
}

// i^k for k in [0, 4).
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

std::string format_coefficient(Complex c) {
  std::ostringstream os;
  os.precision(12);
  if (c.imag() == 0.0) {
    os << c.real();
  } else if (c.real() == 0.0) {
    os << c.imag() << "i";
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag())
       << "i)";
  }
  return os.str();
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::size_t num_qubits)
    : num_qubits_(num_qubits),
      x_(words_for(num_qubits), 0),
      z_(words_for(num_qubits), 0) {}

PauliString::PauliString(
    std::size_t num_qubits,
    std::initializer_list<std::pair<std::size_t, Pauli>> factors)
    : PauliString(num_qubits) {
  for (const auto& [q, p] : factors) set(q, p);
}

PauliString PauliString::parse(std::size_t num_qubits,
                               const std::string& text) {
  PauliString s(num_qubits);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2) throw ValidationError("bad Pauli factor '" + tok + "'");
    Pauli p;
    switch (std::toupper(static_cast<unsigned char>(tok[0]))) {
      case 'X':
        p = Pauli::X;
        break;
      case 'Y':
        p = Pauli::Y;
        break;
      case 'Z':
        p = Pauli::Z;
        break;
      case 'I':
        p = Pauli::I;
        break;
      default:
        throw ValidationError("bad Pauli factor '" + tok + "'");
    }
    std::size_t q = 0;
    try {
      q = std::stoul(tok.substr(1));
    } catch (const std::exception&) {
      throw ValidationError("bad Pauli factor '" + tok + "'");
    }
    s.set(q, p);
  }
  return s;
}

void PauliString::check_qubit(std::size_t qubit) const {
  if (qubit >= num_qubits_) {
    throw IndexError("qubit " + std::to_string(qubit) + " out of range for " +
                     std::to_string(num_qubits_) + " qubits");
  }
}

Pauli PauliString::get(std::size_t qubit) const {
  check_qubit(qubit);
  const std::size_t w = qubit / kWordBits;
  const std::uint64_t bit = std::uint64_t{1} << (qubit % kWordBits);
  const unsigned x = (x_[w] & bit) ? 1u : 0u;
  const unsigned z = (z_[w] & bit) ? 2u : 0u;
  return static_cast<Pauli>(x | z);
}

void PauliString::set(std::size_t qubit, Pauli p) {
  check_qubit(qubit);
  const std::size_t w = qubit / kWordBits;
  const std::uint64_t bit = std::uint64_t{1} << (qubit % kWordBits);
  const auto v = static_cast<unsigned>(p);
  x_[w] = (v & 1u) ? (x_[w] | bit) : (x_[w] & ~bit);
  z_[w] = (v & 2u) ? (z_[w] | bit) : (z_[w] & ~bit);
}

std::size_t PauliString::weight() const noexcept {
  std::size_t n = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) n += std::popcount(x_[w] | z_[w]);
  return n;
}

bool PauliString::is_identity() const noexcept {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] | z_[w]) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, Pauli>> PauliString::factors() const {
  std::vector<std::pair<std::size_t, Pauli>> out;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    std::uint64_t support = x_[w] | z_[w];
    while (support) {
      const int b = std::countr_zero(support);
      support &= support - 1;
      const std::size_t q = w * kWordBits + static_cast<std::size_t>(b);
      const unsigned x = (x_[w] >> b) & 1u;
      const unsigned z = ((z_[w] >> b) & 1u) << 1;
      out.emplace_back(q, static_cast<Pauli>(x | z));
    }
  }
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (num_qubits_ != other.num_qubits_) {
    throw DimensionMismatchError("commutes_with: qubit counts differ");
  }
  std::size_t anti = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    anti += std::popcount((x_[w] & other.z_[w]) ^ (z_[w] & other.x_[w]));
  }
  return anti % 2 == 0;
}

std::string PauliString::to_string() const {
  if (is_identity()) return "I";
  std::string out;
  for (const auto& [q, p] : factors()) {
    if (!out.empty()) out += ' ';
    out += to_char(p);
    out += std::to_string(q);
  }
  return out;
}

namespace {

// First qubit >= from on which s acts non-trivially, or npos.
std::size_t next_support(std::span<const std::uint64_t> x,
                         std::span<const std::uint64_t> z, std::size_t from) {
  for (std::size_t w = from / kWordBits; w < x.size(); ++w) {
    std::uint64_t support = x[w] | z[w];
    if (w == from / kWordBits) support &= ~std::uint64_t{0} << (from % kWordBits);
    if (support) return w * kWordBits + std::countr_zero(support);
  }
  return std::string::npos;
}

}  // namespace

bool canonical_less(const PauliString& a, const PauliString& b) {
  // The first differing (index, letter) pair decides; a proper prefix sorts
  // first, so the identity precedes everything.
  std::size_t ia = next_support(a.x_words(), a.z_words(), 0);
  std::size_t ib = next_support(b.x_words(), b.z_words(), 0);
  while (ia != std::string::npos || ib != std::string::npos) {
    if (ia == std::string::npos) return true;
    if (ib == std::string::npos) return false;
    if (ia != ib) return ia < ib;
    const char la = to_char(a.get(ia));
    const char lb = to_char(b.get(ib));
    if (la != lb) return la < lb;
    ia = next_support(a.x_words(), a.z_words(), ia + 1);
    ib = next_support(b.x_words(), b.z_words(), ib + 1);
  }
  return false;
}

std::size_t PauliStringHash::operator()(const PauliString& s) const noexcept {
  std::size_t h = s.num_qubits_ * 0x9e3779b97f4a7c15ULL;
  for (std::size_t w = 0; w < s.x_.size(); ++w) {
    h ^= s.x_[w] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= (s.z_[w] * 0xff51afd7ed558ccdULL) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

std::pair<int, PauliString> multiply_strings(const PauliString& a,
                                             const PauliString& b) {
  if (a.num_qubits_ != b.num_qubits_) {
    throw DimensionMismatchError("Pauli product: " +
                                 std::to_string(a.num_qubits_) + " vs " +
                                 std::to_string(b.num_qubits_) + " qubits");
  }
  // With P(x,z) = i^{xz} X^x Z^z per qubit,
  //   P1 P2 = i^{x1 z1 + x2 z2 - x3 z3} (-1)^{z1 x2} P3.
  PauliString out(a.num_qubits_);
  long k = 0;
  for (std::size_t w = 0; w < a.x_.size(); ++w) {
    const std::uint64_t x3 = a.x_[w] ^ b.x_[w];
    const std::uint64_t z3 = a.z_[w] ^ b.z_[w];
    k += std::popcount(a.x_[w] & a.z_[w]);
    k += std::popcount(b.x_[w] & b.z_[w]);
    k -= std::popcount(x3 & z3);
    k += 2 * std::popcount(a.z_[w] & b.x_[w]);
    out.x_[w] = x3;
    out.z_[w] = z3;
  }
  return {static_cast<int>(((k % 4) + 4) % 4), std::move(out)};
}

std::string PauliTerm::to_string() const {
  return format_coefficient(coefficient_) + " " + string_.to_string();
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
  auto [k, s] = multiply_strings(a.string(), b.string());
  return PauliTerm(a.coefficient() * b.coefficient() * i_power(k), std::move(s));
}

std::size_t tensor_weight(const PauliTerm& t) noexcept {
  return t.string().weight();
}

PauliOperatorSum::PauliOperatorSum(std::size_t num_qubits,
                                   std::vector<PauliTerm> terms)
    : num_qubits_(num_qubits) {
  terms_.reserve(terms.size());
  for (auto& t : terms) add(std::move(t));
}

void PauliOperatorSum::add(PauliTerm term) {
  if (term.num_qubits() != num_qubits_) {
    throw DimensionMismatchError("term on " + std::to_string(term.num_qubits()) +
                                 " qubits added to a sum on " +
                                 std::to_string(num_qubits_));
  }
  terms_.push_back(std::move(term));
}

void PauliOperatorSum::add(const PauliOperatorSum& other, Complex scale) {
  if (other.num_qubits_ != num_qubits_) {
    throw DimensionMismatchError("adding sums over different qubit counts");
  }
  for (const auto& t : other.terms_) {
    terms_.emplace_back(t.coefficient() * scale, t.string());
  }
}

PauliOperatorSum operator*(const PauliOperatorSum& a, const PauliOperatorSum& b) {
  if (a.num_qubits_ != b.num_qubits_) {
    throw DimensionMismatchError("multiplying sums over different qubit counts");
  }
  PauliOperatorSum out(a.num_qubits_);
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) out.terms_.push_back(multiply(ta, tb));
  }
  return out;
}

std::string PauliOperatorSum::to_string() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += t.to_string();
  }
  return out.empty() ? "0" : out;
}

void PauliAccumulator::add(const PauliTerm& term, Complex scale) {
  if (term.num_qubits() != num_qubits_) {
    throw DimensionMismatchError("accumulating a term on the wrong qubit count");
  }
  terms_[term.string()] += term.coefficient() * scale;
}

void PauliAccumulator::add(const PauliOperatorSum& sum, Complex scale) {
  for (const auto& t : sum.terms()) add(t, scale);
}

PauliOperatorSum PauliAccumulator::to_sum(double eps) const {
  std::vector<const std::pair<const PauliString, Complex>*> kept;
  kept.reserve(terms_.size());
  for (const auto& entry : terms_) {
    if (std::abs(entry.second) >= eps) kept.push_back(&entry);
  }
  std::sort(kept.begin(), kept.end(), [](const auto* a, const auto* b) {
    return canonical_less(a->first, b->first);
  });
  PauliOperatorSum out(num_qubits_);
  for (const auto* e : kept) out.add(PauliTerm(e->second, e->first));
  return out;
}

PauliOperatorSum simplify(const PauliOperatorSum& s, double eps) {
  if (eps < 0.0) throw DomainError("simplify: eps must be non-negative");
  PauliAccumulator acc(s.num_qubits());
  acc.add(s);
  return acc.to_sum(eps);
}

double coefficient_l1_norm(const PauliOperatorSum& s, bool include_identity) {
  double norm = 0.0;
  for (const auto& t : s.terms()) {
    if (!include_identity && t.string().is_identity()) continue;
    norm += std::abs(t.coefficient());
  }
  return norm;
}

bool has_real_coefficients(const PauliOperatorSum& s, double tol) {
  return std::all_of(s.terms().begin(), s.terms().end(), [tol](const auto& t) {
    return std::abs(t.coefficient().imag()) <= tol;
  });
}

}  // namespace superfast
