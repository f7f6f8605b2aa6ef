#include "superfast/fermion_hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "superfast/errors.hpp"

namespace superfast {

namespace {

bool index_less(const TwoBodyEntry& a, const TwoBodyEntry& b) {
  return a.index < b.index;
}

ModeIndex spin_mode(std::size_t orbital, int spin, std::size_t m, SpinOrdering ordering) {
  const std::size_t mode =
      ordering == SpinOrdering::Blocked ? orbital + static_cast<std::size_t>(spin) * m
                                        : 2 * orbital + static_cast<std::size_t>(spin);
  return static_cast<ModeIndex>(mode);
}

std::string index_text(const std::array<ModeIndex, 4>& idx) {
  return "(" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
         std::to_string(idx[2]) + "," + std::to_string(idx[3]) + ")";
}

}  // namespace

FermionHamiltonian::FermionHamiltonian(std::size_t num_modes, double constant,
                                       Matrix one_body,
                                       std::vector<TwoBodyEntry> two_body,
                                       std::vector<Spin> spins)
    : num_modes_(num_modes),
      constant_(constant),
      one_body_(std::move(one_body)),
      spins_(std::move(spins)) {
  if (one_body_.rows() == 0 && one_body_.cols() == 0) one_body_ = Matrix(num_modes, num_modes);
  if (one_body_.rows() != num_modes || one_body_.cols() != num_modes) {
    throw DimensionMismatchError("one-body matrix does not match the number of modes");
  }
  if (!spins_.empty() && spins_.size() != num_modes) {
    throw DimensionMismatchError("spin labels do not match the number of modes");
  }
  for (const auto& e : two_body) {
    for (ModeIndex i : e.index) {
      if (i >= num_modes) throw IndexError("two-body index " + index_text(e.index) + " out of range");
    }
  }
  std::sort(two_body.begin(), two_body.end(), index_less);
  for (const auto& e : two_body) {
    if (!two_body_.empty() && two_body_.back().index == e.index) {
      two_body_.back().value += e.value;
    } else {
      two_body_.push_back(e);
    }
  }
  std::erase_if(two_body_, [](const TwoBodyEntry& e) { return e.value == 0.0; });
}

FermionHamiltonian FermionHamiltonian::from_spatial_integrals(const Matrix& h1,
                                                              const Tensor4& h2,
                                                              double constant,
                                                              SpinOrdering ordering,
                                                              double drop_below) {
  const std::size_t m = h1.rows();
  if (h1.cols() != m || h2.extent() != m) {
    throw DimensionMismatchError("spatial integrals have inconsistent dimensions");
  }
  if (drop_below < 0.0) throw DomainError("drop threshold must be >= 0");
  if (h1.asymmetry() > 1e-10) throw ValidationError("one-body integrals are not symmetric");
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = 0; s < m; ++s) {
          const double v = h2(p, q, r, s);
          if (std::abs(v - h2(q, p, r, s)) > 1e-10 || std::abs(v - h2(p, q, s, r)) > 1e-10 ||
              std::abs(v - h2(r, s, p, q)) > 1e-10) {
            throw ValidationError("two-body integrals lack 8-fold symmetry");
          }
        }
      }
    }
  }

  const std::size_t modes = 2 * m;
  Matrix one(modes, modes);
  std::vector<Spin> spins(modes);
  for (int s = 0; s < 2; ++s) {
    for (std::size_t p = 0; p < m; ++p) {
      spins[spin_mode(p, s, m, ordering)] = s == 0 ? Spin::Up : Spin::Down;
      for (std::size_t q = 0; q < m; ++q) {
        one(spin_mode(p, s, m, ordering), spin_mode(q, s, m, ordering)) = h1(p, q);
      }
    }
  }

  // 1/2 sum (pq|rs) a_{p s1}^ a_{r s2}^ a_{s s2} a_{q s1}
  std::vector<TwoBodyEntry> entries;
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = 0; s < m; ++s) {
          const double v = 0.5 * h2(p, q, r, s);
          if (v == 0.0 || std::abs(v) < drop_below) continue;
          for (int s1 = 0; s1 < 2; ++s1) {
            for (int s2 = 0; s2 < 2; ++s2) {
              entries.push_back({{spin_mode(p, s1, m, ordering), spin_mode(r, s2, m, ordering),
                                  spin_mode(s, s2, m, ordering), spin_mode(q, s1, m, ordering)},
                                 v});
            }
          }
        }
      }
    }
  }
  return FermionHamiltonian(modes, constant, std::move(one), std::move(entries),
                            std::move(spins));
}

double FermionHamiltonian::two_body(ModeIndex p, ModeIndex q, ModeIndex r,
                                    ModeIndex s) const {
  const TwoBodyEntry probe{{p, q, r, s}, 0.0};
  const auto it = std::lower_bound(two_body_.begin(), two_body_.end(), probe, index_less);
  if (it != two_body_.end() && it->index == probe.index) return it->value;
  return 0.0;
}

void FermionHamiltonian::validate(double tol) const {
  if (one_body_.asymmetry() > tol) throw ValidationError("one-body tensor is not symmetric");
  for (const auto& e : two_body_) {
    const auto [p, q, r, s] = e.index;
    if (std::abs(e.value - two_body(q, p, s, r)) > tol) {
      throw ValidationError("two-body entry " + index_text(e.index) + " breaks h_pqrs = h_qpsr");
    }
    if (std::abs(e.value - two_body(s, r, q, p)) > tol) {
      throw ValidationError("two-body entry " + index_text(e.index) + " is not Hermitian");
    }
  }
  if (spins_.empty()) return;
  for (std::size_t p = 0; p < num_modes_; ++p) {
    for (std::size_t q = 0; q < num_modes_; ++q) {
      if (one_body_(p, q) != 0.0 && spins_[p] != spins_[q]) {
        throw ValidationError("one-body entry couples opposite spins");
      }
    }
  }
  for (const auto& e : two_body_) {
    auto up = [&](ModeIndex i) { return spins_[i] == Spin::Up ? 1 : 0; };
    if (up(e.index[0]) + up(e.index[1]) != up(e.index[2]) + up(e.index[3])) {
      throw ValidationError("two-body entry " + index_text(e.index) + " changes total spin");
    }
  }
}

FermionHamiltonian apply_cutoff(const FermionHamiltonian& h, double eps) {
  if (eps < 0.0) throw DomainError("cutoff must be >= 0");
  Matrix one = h.one_body();
  for (std::size_t p = 0; p < one.rows(); ++p) {
    for (std::size_t q = 0; q < one.cols(); ++q) {
      if (std::abs(one(p, q)) < eps) one(p, q) = 0.0;
    }
  }
  std::vector<TwoBodyEntry> kept;
  for (const auto& e : h.two_body_entries()) {
    if (std::abs(e.value) >= eps) kept.push_back(e);
  }
  return FermionHamiltonian(h.num_modes(), h.constant(), std::move(one), std::move(kept),
                            h.spins());
}

std::string to_string(TermKind kind) {
  switch (kind) {
    case TermKind::Number: return "number";
    case TermKind::CoulombExchange: return "coulomb_exchange";
    case TermKind::Excitation: return "excitation";
    case TermKind::NumberExcitation: return "number_excitation";
    case TermKind::DoubleExcitation: return "double_excitation";
    case TermKind::PairCreation: return "pair_creation";
  }
  return "unknown";
}

std::size_t arity(TermKind kind) {
  switch (kind) {
    case TermKind::Number: return 1;
    case TermKind::CoulombExchange:
    case TermKind::Excitation:
    case TermKind::PairCreation: return 2;
    case TermKind::NumberExcitation: return 3;
    case TermKind::DoubleExcitation: return 4;
  }
  return 0;
}

ClassifiedHamiltonian classify(const FermionHamiltonian& h, double cutoff) {
  if (cutoff < 0.0) throw DomainError("cutoff must be >= 0");

  struct Accum {
    double sum = 0.0;
    double mass = 0.0;
    int sign = 0;
    std::uint32_t count = 0;
  };
  using Key = std::tuple<TermKind, std::array<ModeIndex, 4>>;
  std::map<Key, Accum> acc;
  auto add = [&](TermKind kind, std::array<ModeIndex, 4> idx, int sign, double v) {
    auto& a = acc[{kind, idx}];
    a.sum += sign * v;
    a.mass += std::abs(v);
    if (a.count == 0) a.sign = sign;
    ++a.count;
  };

  const Matrix& one = h.one_body();
  for (std::size_t p = 0; p < h.num_modes(); ++p) {
    for (std::size_t q = 0; q < h.num_modes(); ++q) {
      const double v = one(p, q);
      if (v == 0.0 || std::abs(v) < cutoff) continue;
      const auto a = static_cast<ModeIndex>(std::min(p, q));
      const auto b = static_cast<ModeIndex>(std::max(p, q));
      if (p == q) {
        add(TermKind::Number, {a, 0, 0, 0}, 1, v);
      } else {
        add(TermKind::Excitation, {a, b, 0, 0}, 1, 0.5 * v);
      }
    }
  }

  for (const auto& e : h.two_body_entries()) {
    if (std::abs(e.value) < cutoff) continue;
    const auto [p, q, r, s] = e.index;
    if (p == q || r == s) continue;
    const ModeIndex c_lo = std::min(p, q), c_hi = std::max(p, q);
    const ModeIndex a_lo = std::min(r, s), a_hi = std::max(r, s);
    const int common = (c_lo == a_lo || c_lo == a_hi ? 1 : 0) + (c_hi == a_lo || c_hi == a_hi ? 1 : 0);
    if (common == 2) {
      // target a_i^ a_j^ a_j a_i
      const int sign = (p == c_lo ? 1 : -1) * (r == c_hi ? 1 : -1);
      add(TermKind::CoulombExchange, {c_lo, c_hi, 0, 0}, sign, e.value);
    } else if (common == 1) {
      const ModeIndex j = (c_lo == a_lo || c_lo == a_hi) ? c_lo : c_hi;
      const ModeIndex ci = p == j ? q : p;
      const ModeIndex ak = r == j ? s : r;
      // target a_ci^ a_j^ a_j a_ak
      const int sign = (q == j ? 1 : -1) * (r == j ? 1 : -1);
      add(TermKind::NumberExcitation, {std::min(ci, ak), j, std::max(ci, ak), 0}, sign,
          0.5 * e.value);
    } else {
      // target a_{c_lo}^ a_{c_hi}^ a_{a_hi} a_{a_lo}, either the forward
      // operator or the partner of the term keyed by the smaller pair
      const int sign = (p == c_lo ? 1 : -1) * (r == a_hi ? 1 : -1);
      std::array<ModeIndex, 4> key;
      if (std::pair(c_lo, c_hi) < std::pair(a_lo, a_hi)) {
        key = {c_lo, c_hi, a_hi, a_lo};
      } else {
        key = {a_lo, a_hi, c_hi, c_lo};
      }
      add(TermKind::DoubleExcitation, key, sign, 0.5 * e.value);
    }
  }

  ClassifiedHamiltonian out;
  out.num_modes = h.num_modes();
  out.constant = h.constant();
  out.spins = h.spins();
  for (const auto& [key, a] : acc) {
    if (std::abs(a.sum) <= 1e-14 * a.mass) continue;
    ClassifiedTerm t;
    t.kind = std::get<0>(key);
    t.indices = std::get<1>(key);
    t.coefficient = a.sum;
    t.sign = a.sign;
    t.source_entries = a.count;
    out.terms.push_back(t);
  }
  return out;
}

std::vector<FermionMonomial> to_monomials(const ClassifiedTerm& term) {
  const double c = term.coefficient;
  const auto& x = term.indices;
  auto cr = [](ModeIndex i) { return LadderOp{i, true}; };
  auto an = [](ModeIndex i) { return LadderOp{i, false}; };
  switch (term.kind) {
    case TermKind::Number:
      return {{c, {cr(x[0]), an(x[0])}}};
    case TermKind::CoulombExchange:
      return {{c, {cr(x[0]), cr(x[1]), an(x[1]), an(x[0])}}};
    case TermKind::Excitation:
      return {{c, {cr(x[0]), an(x[1])}}, {c, {cr(x[1]), an(x[0])}}};
    case TermKind::NumberExcitation:
      return {{c, {cr(x[0]), cr(x[1]), an(x[1]), an(x[2])}},
              {c, {cr(x[2]), cr(x[1]), an(x[1]), an(x[0])}}};
    case TermKind::DoubleExcitation:
      return {{c, {cr(x[0]), cr(x[1]), an(x[2]), an(x[3])}},
              {c, {cr(x[3]), cr(x[2]), an(x[1]), an(x[0])}}};
    case TermKind::PairCreation:
      return {{c, {cr(x[0]), cr(x[1])}}, {c, {an(x[1]), an(x[0])}}};
  }
  return {};
}

std::vector<FermionMonomial> to_monomials(const FermionHamiltonian& h) {
  std::vector<FermionMonomial> out;
  if (h.constant() != 0.0) out.push_back({h.constant(), {}});
  for (std::size_t p = 0; p < h.num_modes(); ++p) {
    for (std::size_t q = 0; q < h.num_modes(); ++q) {
      const double v = h.one_body(p, q);
      if (v == 0.0) continue;
      out.push_back({v, {{static_cast<ModeIndex>(p), true}, {static_cast<ModeIndex>(q), false}}});
    }
  }
  for (const auto& e : h.two_body_entries()) {
    out.push_back({e.value,
                   {{e.index[0], true}, {e.index[1], true}, {e.index[2], false}, {e.index[3], false}}});
  }
  return out;
}

std::vector<FermionMonomial> to_monomials(const ClassifiedHamiltonian& h) {
  std::vector<FermionMonomial> out;
  if (h.constant != 0.0) out.push_back({h.constant, {}});
  for (const auto& t : h.terms) {
    auto part = to_monomials(t);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace superfast
