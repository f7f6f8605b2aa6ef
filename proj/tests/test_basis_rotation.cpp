#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "superfast/basis_rotation.hpp"
#include "superfast/errors.hpp"

using namespace superfast;

namespace {

Matrix chain_overlap(double spacing_angstrom, double exponent, int n = 4) {
  const auto c = build_lattice(LatticeSpec{1, n, spacing_angstrom, exponent});
  return compute_integrals(c, exponent).overlap;
}

}  // namespace

TEST_CASE("symmetric orthogonalizer is S^-1/2") {
  const Matrix s = chain_overlap(1.0, 0.5);
  const auto x = symmetric_orthogonalizer(s);
  CHECK(x.kind == OrthogonalizerKind::Symmetric);
  CHECK(x.x.asymmetry() < 1e-12);
  CHECK(max_abs_diff(x.x.transpose() * s * x.x, Matrix::identity(4)) < 1e-10);
  CHECK(max_abs_diff(x.x * x.x * s, Matrix::identity(4)) < 1e-10);
}

TEST_CASE("canonical orthogonalizer drops small eigenvalues") {
  Matrix s = Matrix::identity(3);
  s(0, 1) = s(1, 0) = 1.0 - 1e-12;
  const auto x = canonical_orthogonalizer(s, 1e-8);
  CHECK(x.x.cols() == 2);
  CHECK(x.dropped_eigenvalues.size() == 1);
  CHECK(max_abs_diff(x.x.transpose() * s * x.x, Matrix::identity(2)) < 1e-8);
  CHECK_THROWS_AS(symmetric_orthogonalizer(s), LinearDependenceError);
  CHECK_THROWS_AS(canonical_orthogonalizer(s, 10.0), EmptyBasisError);
  CHECK_THROWS_AS(canonical_orthogonalizer(s, -1.0), DomainError);
}

TEST_CASE("canonical keeps columns in descending eigenvalue order") {
  const Matrix s = chain_overlap(0.7, 0.4);
  const auto x = canonical_orthogonalizer(s, 0.0);
  REQUIRE(x.x.cols() == 4);
  // Column norms scale as s_k^{-1/2}, so they grow along the columns.
  double prev = 0.0;
  for (std::size_t c = 0; c < 4; ++c) {
    double n = 0;
    for (std::size_t r = 0; r < 4; ++r) n += x.x(r, c) * x.x(r, c);
    CHECK(n >= prev - 1e-12);
    prev = n;
  }
}

TEST_CASE("non-symmetric overlap is rejected") {
  Matrix s = Matrix::identity(2);
  s(0, 1) = 0.3;
  CHECK_THROWS_AS(symmetric_orthogonalizer(s), ValidationError);
  CHECK_THROWS_AS(symmetric_orthogonalizer(Matrix(2, 3)), DimensionMismatchError);
}

TEST_CASE("integral rotation against the direct eight-index sum") {
  const auto c = build_lattice(LatticeSpec{1, 3, 0.9, 0.6});
  const auto raw = compute_integrals(c, 0.6);
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  Matrix x(3, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) x(i, j) = u(rng);
  const auto out = rotate_integrals(raw, x, 3);
  REQUIRE(out.two_body.extent() == 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t cc = 0; cc < 2; ++cc)
        for (std::size_t d = 0; d < 2; ++d) {
          double ref = 0;
          for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
              for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t l = 0; l < 3; ++l)
                  ref += x(i, a) * x(j, b) * x(k, cc) * x(l, d) * raw.eri(i, j, k, l);
          CHECK(out.two_body(a, b, cc, d) == doctest::Approx(ref).epsilon(1e-12));
        }
  double h01 = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h01 += x(i, 0) * raw.core(i, j) * x(j, 1);
  CHECK(out.one_body(0, 1) == doctest::Approx(h01));
  CHECK(out.constant == raw.nuclear_repulsion);
}

TEST_CASE("rotated overlap is the identity and tensors keep their symmetry") {
  const auto c = build_lattice(LatticeSpec{2, 2, 1.0, 1.0});
  const auto raw = compute_integrals(c, 1.0);
  const auto out = rotate_integrals(raw, symmetric_orthogonalizer(raw.overlap).x);
  CHECK(max_abs_diff(out.overlap, Matrix::identity(4)) < 1e-10);
  CHECK(out.one_body.asymmetry() < 1e-12);
  const auto& e = out.two_body;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) {
          CHECK(std::abs(e(i, j, k, l) - e(j, i, l, k)) < 1e-12);
          CHECK(std::abs(e(i, j, k, l) - e(k, l, i, j)) < 1e-12);
        }
  CHECK_THROWS_AS(rotate_integrals(raw, Matrix(3, 3)), DimensionMismatchError);
}
