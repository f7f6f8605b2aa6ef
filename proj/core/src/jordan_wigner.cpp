#include "superfast/jordan_wigner.hpp"

#include "superfast/errors.hpp"

namespace superfast {

namespace {

void add_monomial(PauliAccumulator& acc, const FermionMonomial& m, std::size_t n) {
  PauliOperatorSum prod(n);
  prod.add(PauliTerm::identity(n, m.coefficient));
  for (const auto& op : m.ops) {
    prod = simplify(prod * jw_ladder(op.mode, op.dagger, n), 0.0);
  }
  acc.add(prod);
}

}  // namespace

PauliOperatorSum jw_ladder(ModeIndex j, bool dagger, std::size_t num_modes) {
  if (j >= num_modes) {
    throw IndexError("mode " + std::to_string(j) + " out of range for " +
                     std::to_string(num_modes) + " modes");
  }
  PauliString x(num_modes);
  for (std::size_t k = 0; k < j; ++k) x.set(k, Pauli::Z);
  PauliString y = x;
  x.set(j, Pauli::X);
  y.set(j, Pauli::Y);
  const Complex half{0.5, 0.0};
  const Complex yc = dagger ? Complex{0.0, -0.5} : Complex{0.0, 0.5};
  return PauliOperatorSum(num_modes, {PauliTerm(half, x), PauliTerm(yc, y)});
}

PauliOperatorSum jw_monomial(const FermionMonomial& m, std::size_t num_modes) {
  PauliAccumulator acc(num_modes);
  add_monomial(acc, m, num_modes);
  return acc.to_sum();
}

PauliOperatorSum jw_transform(const ClassifiedHamiltonian& h, double eps) {
  const std::size_t n = h.num_modes;
  PauliAccumulator acc(n);
  if (h.constant != 0.0) acc.add(PauliTerm::identity(n, h.constant));
  for (const auto& t : h.terms) {
    for (const auto& m : to_monomials(t)) add_monomial(acc, m, n);
  }
  return acc.to_sum(eps);
}

PauliOperatorSum jw_transform(const FermionHamiltonian& h, double cutoff, double eps) {
  return jw_transform(classify(h, cutoff), eps);
}

}  // namespace superfast
