#include "superfast/spectral_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "superfast/errors.hpp"
#include "superfast/jordan_wigner.hpp"
#include "superfast/linalg.hpp"

namespace superfast {

namespace {

std::uint64_t x_mask(const PauliString& p) {
  return p.x_words().empty() ? 0 : p.x_words()[0];
}

std::uint64_t z_mask(const PauliString& p) {
  return p.z_words().empty() ? 0 : p.z_words()[0];
}

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void require_dense(std::size_t q) {
  if (q > kMaxDenseQubits) {
    throw SizeError(std::to_string(q) + " qubits exceed the dense limit of " +
                    std::to_string(kMaxDenseQubits));
  }
}

SparseState apply_projector_factor(const PauliTerm& s, const SparseState& psi) {
  PauliOperatorSum half(s.num_qubits());
  half.add(PauliTerm::identity(s.num_qubits(), 0.5));
  half.add(PauliTerm(0.5 * s.coefficient(), s.string()));
  return apply_operator(half, psi);
}

}  // namespace

DenseOperator::DenseOperator(std::size_t num_qubits) : num_qubits_(num_qubits) {
  require_dense(num_qubits);
  dim_ = std::size_t{1} << num_qubits;
  data_.assign(dim_ * dim_, Complex{0.0, 0.0});
}

Complex DenseOperator::trace() const {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double DenseOperator::hermiticity_error() const {
  double e = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      e = std::max(e, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return e;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatchError("dense operator dimensions differ");
  DenseOperator out(a.num_qubits_);
  const std::size_t n = a.dim_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex v = a(i, k);
      if (v == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += v * b(k, j);
    }
  }
  return out;
}

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatchError("dense operator dimensions differ");
  DenseOperator out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatchError("dense operator dimensions differ");
  DenseOperator out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatchError("dense operator dimensions differ");
  double e = 0.0;
  for (std::size_t i = 0; i < a.data_.size(); ++i) e = std::max(e, std::abs(a.data_[i] - b.data_[i]));
  return e;
}

BasisImage apply_to_basis(const PauliString& p, std::uint64_t basis_state) {
  if (p.num_qubits() > 64) throw SizeError("basis-state application needs at most 64 qubits");
  const std::uint64_t x = x_mask(p);
  const std::uint64_t z = z_mask(p);
  // Y = i X Z on every qubit
  const int k = std::popcount(x & z) + 2 * std::popcount(z & basis_state);
  return {basis_state ^ x, i_power(k)};
}

SparseState apply_operator(const PauliOperatorSum& s, const SparseState& psi) {
  std::map<std::uint64_t, Complex> acc;
  for (const auto& [b, amp] : psi) {
    for (const auto& t : s.terms()) {
      const auto img = apply_to_basis(t.string(), b);
      acc[img.state] += t.coefficient() * img.phase * amp;
    }
  }
  SparseState out;
  for (const auto& [b, amp] : acc) {
    if (std::abs(amp) > 1e-14) out.emplace_back(b, amp);
  }
  return out;
}

DenseOperator dense_matrix(const PauliOperatorSum& s) {
  DenseOperator out(s.num_qubits());
  for (const auto& t : s.terms()) {
    for (std::uint64_t b = 0; b < out.dim(); ++b) {
      const auto img = apply_to_basis(t.string(), b);
      out(img.state, b) += t.coefficient() * img.phase;
    }
  }
  return out;
}

DenseOperator dense_matrix(const PauliTerm& t) {
  return dense_matrix(PauliOperatorSum(t.num_qubits(), {t}));
}

DenseOperator codespace_projector(std::span<const PauliTerm> stabilizers,
                                  std::size_t num_qubits) {
  for (std::size_t a = 0; a < stabilizers.size(); ++a) {
    for (std::size_t b = a + 1; b < stabilizers.size(); ++b) {
      if (!stabilizers[a].string().commutes_with(stabilizers[b].string())) {
        throw AlgebraError("loop stabilizers " + std::to_string(a) + " and " +
                           std::to_string(b) + " anticommute");
      }
    }
  }
  DenseOperator p(num_qubits);
  for (std::uint64_t b = 0; b < p.dim(); ++b) {
    SparseState v{{b, Complex{1.0, 0.0}}};
    for (const auto& s : stabilizers) v = apply_projector_factor(s, v);
    for (const auto& [r, amp] : v) p(r, b) = amp;
  }
  return p;
}

std::size_t symplectic_rank(std::span<const PauliTerm> stabilizers) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& s : stabilizers) {
    std::vector<std::uint64_t> r(s.string().x_words().begin(), s.string().x_words().end());
    r.insert(r.end(), s.string().z_words().begin(), s.string().z_words().end());
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  const std::size_t words = rows.empty() ? 0 : rows[0].size();
  for (std::size_t w = 0; w < words; ++w) {
    for (int bit = 0; bit < 64; ++bit) {
      const std::uint64_t m = std::uint64_t{1} << bit;
      std::size_t pivot = rank;
      while (pivot < rows.size() && !(rows[pivot][w] & m)) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[rank], rows[pivot]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r != rank && (rows[r][w] & m)) {
          for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
        }
      }
      ++rank;
    }
  }
  return rank;
}

std::vector<double> hermitian_eigenvalues(std::span<const Complex> matrix, std::size_t dim) {
  if (matrix.size() != dim * dim) throw DimensionMismatchError("matrix size does not match dimension");
  // H = A + iB has the real symmetric embedding [[A, -B], [B, A]] whose
  // spectrum is that of H with every eigenvalue doubled.
  Matrix real(2 * dim, 2 * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const Complex v = matrix[r * dim + c];
      real(r, c) = real(r + dim, c + dim) = v.real();
      real(r + dim, c) = v.imag();
      real(r, c + dim) = -v.imag();
    }
  }
  const auto eig = jacobi_eigen(real);
  std::vector<double> out;
  for (std::size_t k = 0; k < dim; ++k) out.push_back(0.5 * (eig.values[2 * k] + eig.values[2 * k + 1]));
  return out;
}

std::vector<double> hermitian_eigenvalues(const DenseOperator& a) {
  std::vector<Complex> m(a.dim() * a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) m[r * a.dim() + c] = a(r, c);
  }
  return hermitian_eigenvalues(m, a.dim());
}

SpectralComparison sector_spectra_match(const FermionHamiltonian& h, double cutoff,
                                        const GraphOptions& options) {
  ClassifiedHamiltonian classified = classify(h, cutoff);
  const InteractionGraph graph = build_interaction_graph(classified, options);
  const std::size_t modes = graph.num_vertices();
  const std::size_t q = graph.num_qubits();
  if (modes > kMaxSpectralModes) throw SizeError("too many modes for the spectral oracle");
  if (q > kMaxSpectralQubits) throw SizeError("too many edges for the spectral oracle");

  SpectralComparison out;
  out.edges = q;

  // JW side on the component-parity sector.
  std::vector<int> component(modes, -1);
  int ncomp = 0;
  for (std::size_t root = 0; root < modes; ++root) {
    if (component[root] >= 0) continue;
    std::vector<std::size_t> stack{root};
    component[root] = ncomp;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (ModeIndex w : graph.neighbors(static_cast<ModeIndex>(v))) {
        if (component[w] < 0) {
          component[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::uint64_t> comp_mask(static_cast<std::size_t>(ncomp), 0);
  for (std::size_t v = 0; v < modes; ++v) comp_mask[static_cast<std::size_t>(component[v])] |= std::uint64_t{1} << v;

  std::vector<std::uint64_t> sector;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << modes); ++b) {
    bool ok = true;
    for (std::uint64_t m : comp_mask) ok = ok && std::popcount(b & m) % 2 == 0;
    if (ok) sector.push_back(b);
  }
  classified.num_modes = modes;
  const PauliOperatorSum jw = jw_transform(classified);
  std::map<std::uint64_t, std::size_t> sector_index;
  for (std::size_t i = 0; i < sector.size(); ++i) sector_index[sector[i]] = i;
  const std::size_t dj = sector.size();
  std::vector<Complex> hj(dj * dj, Complex{0.0, 0.0});
  for (std::size_t c = 0; c < dj; ++c) {
    for (const auto& t : jw.terms()) {
      const auto img = apply_to_basis(t.string(), sector[c]);
      const auto it = sector_index.find(img.state);
      if (it == sector_index.end()) {
        if (std::abs(t.coefficient()) > 1e-12) throw AlgebraError("JW Hamiltonian leaves the parity sector");
        continue;
      }
      hj[it->second * dj + c] += t.coefficient() * img.phase;
    }
  }
  out.jw_dimension = dj;
  out.jw_spectrum = hermitian_eigenvalues(hj, dj);

  // OSE side on the code space, built orbit by orbit of the stabilizer group.
  const PauliOperatorSum ose = ose_transform(classified, graph);
  const auto stabs = loop_stabilizers(graph);
  for (std::size_t a = 0; a < stabs.size(); ++a) {
    for (std::size_t b = a + 1; b < stabs.size(); ++b) {
      if (!stabs[a].string().commutes_with(stabs[b].string())) throw AlgebraError("loop stabilizers anticommute");
    }
  }
  std::vector<std::uint64_t> xspan{0};
  for (const auto& s : stabs) {
    const std::uint64_t x = x_mask(s.string());
    if (std::find(xspan.begin(), xspan.end(), x) != xspan.end()) continue;
    const std::size_t n = xspan.size();
    for (std::size_t i = 0; i < n; ++i) xspan.push_back(xspan[i] ^ x);
  }
  const std::uint64_t full = std::uint64_t{1} << q;
  std::vector<bool> covered(full, false);
  std::vector<SparseState> basis;
  for (std::uint64_t b = 0; b < full; ++b) {
    if (covered[b]) continue;
    for (std::uint64_t x : xspan) covered[b ^ x] = true;
    SparseState v{{b, Complex{1.0, 0.0}}};
    for (const auto& s : stabs) v = apply_projector_factor(s, v);
    double norm = 0.0;
    for (const auto& [i, amp] : v) norm += std::norm(amp);
    if (norm < 1e-20) continue;
    for (auto& [i, amp] : v) amp /= std::sqrt(norm);
    basis.push_back(std::move(v));
  }
  const std::size_t dc = basis.size();
  std::vector<Complex> hc(dc * dc, Complex{0.0, 0.0});
  for (std::size_t c = 0; c < dc; ++c) {
    const SparseState hv = apply_operator(ose, basis[c]);
    std::map<std::uint64_t, Complex> lookup(hv.begin(), hv.end());
    for (std::size_t r = 0; r < dc; ++r) {
      Complex dot{0.0, 0.0};
      for (const auto& [i, amp] : basis[r]) {
        const auto it = lookup.find(i);
        if (it != lookup.end()) dot += std::conj(amp) * it->second;
      }
      hc[r * dc + c] = dot;
    }
  }
  out.code_dimension = dc;
  const auto ose_all = hermitian_eigenvalues(hc, dc);

  if (dc % dj != 0 || dj == 0) {
    throw AlgebraError("code space dimension " + std::to_string(dc) +
                       " is not a multiple of the fermionic sector dimension " + std::to_string(dj));
  }
  out.multiplicity = dc / dj;
  for (std::size_t k = 0; k < dc; k += out.multiplicity) out.ose_spectrum.push_back(ose_all[k]);
  for (std::size_t k = 0; k < dj; ++k) {
    out.deviation = std::max(out.deviation, std::abs(out.jw_spectrum[k] - out.ose_spectrum[k]));
  }
  return out;
}

}  // namespace superfast
