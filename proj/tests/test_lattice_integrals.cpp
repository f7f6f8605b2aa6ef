#include <doctest.h>

#include <cmath>
#include <numbers>

#include "superfast/errors.hpp"
#include "superfast/lattice_integrals.hpp"

using namespace superfast;

namespace {

constexpr double kPi = std::numbers::pi;

// Composite Simpson rule on [a, b].
template <typename F>
double simpson(F f, double a, double b, int n = 2000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

double gaussian(const Vec3& r, const Vec3& c, double alpha) {
  const double d2 = (r[0] - c[0]) * (r[0] - c[0]) + (r[1] - c[1]) * (r[1] - c[1]) +
                    (r[2] - c[2]) * (r[2] - c[2]);
  return std::pow(2.0 * alpha / kPi, 0.75) * std::exp(-alpha * d2);
}

}  // namespace

TEST_CASE("Boys function against quadrature of its integral definition") {
  for (double t : {0.0, 1e-8, 0.3, 2.0, 11.9, 12.0, 12.1, 30.0, 200.0}) {
    const double ref = simpson([t](double u) { return std::exp(-t * u * u); }, 0.0, 1.0, 4000);
    CHECK(boys_f0(t) == doctest::Approx(ref).epsilon(1e-10));
  }
  CHECK(boys_f0(0.0) == 1.0);
  CHECK_THROWS_AS(boys_f0(-1.0), DomainError);
}

TEST_CASE("lattice geometry") {
  LatticeSpec spec{2, 3, 1.0, 1.0};
  const auto c = build_lattice(spec);
  REQUIRE(c.size() == 9);
  CHECK(c[1][1] == doctest::Approx(kBohrPerAngstrom));
  CHECK(c[3][0] == doctest::Approx(kBohrPerAngstrom));
  CHECK(c[1][0] == 0.0);
  CHECK_THROWS_AS(build_lattice(LatticeSpec{4, 2, 1.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(build_lattice(LatticeSpec{1, 0, 1.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(build_lattice(LatticeSpec{1, 2, 1.0, -1.0}), ValidationError);
}

TEST_CASE("normalized Gaussians have unit self-overlap") {
  const std::vector<Vec3> c{{0, 0, 0}, {1.3, 0, 0}};
  const auto r = compute_integrals(c, 0.8);
  CHECK(r.overlap(0, 0) == doctest::Approx(1.0));
  CHECK(r.overlap(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("overlap and kinetic integrals against separable quadrature") {
  // Both factorize over Cartesian axes; with the centers on the x axis the
  // y and z factors equal their self-overlap 1D values.
  const double alpha = 0.9;
  const Vec3 a{0, 0, 0}, b{1.1, 0, 0};
  const auto r = compute_integrals(std::vector<Vec3>{a, b}, alpha);
  const double n1 = std::pow(2.0 * alpha / kPi, 0.25);
  auto g = [&](double x, double c) { return n1 * std::exp(-alpha * (x - c) * (x - c)); };
  auto d2g = [&](double x, double c) {
    const double u = x - c;
    return n1 * (4 * alpha * alpha * u * u - 2 * alpha) * std::exp(-alpha * u * u);
  };
  const double sx = simpson([&](double x) { return g(x, 0) * g(x, 1.1); }, -12, 12);
  const double s0 = simpson([&](double x) { return g(x, 0) * g(x, 0); }, -12, 12);
  CHECK(r.overlap(0, 1) == doctest::Approx(sx * s0 * s0).epsilon(1e-9));
  const double tx = simpson([&](double x) { return g(x, 0) * d2g(x, 1.1); }, -12, 12);
  const double ty = simpson([&](double x) { return g(x, 0) * d2g(x, 0); }, -12, 12);
  const double kinetic = -0.5 * (tx * s0 * s0 + 2.0 * sx * ty * s0);
  // Nuclear attraction from the spherical-shell form of a Gaussian charge:
  //   int exp(-p |r - P|^2) / |r - C| = (pi/p)^{3/2} erf(sqrt(p) D) / D.
  const double p = 2 * alpha;
  const double k = n1 * n1 * n1 * n1 * n1 * n1 * std::exp(-alpha / 2 * 1.1 * 1.1);
  double v = 0;
  for (double cx : {0.0, 1.1}) {
    const double d = std::abs(0.55 - cx);
    v -= k * std::pow(kPi / p, 1.5) * std::erf(std::sqrt(p) * d) / d;
  }
  CHECK(r.core(0, 1) - v == doctest::Approx(kinetic).epsilon(1e-8));
}

TEST_CASE("nuclear attraction against radial quadrature") {
  // Single center, one nucleus on top: V = -<phi|1/r|phi> = -2 sqrt(2 alpha / pi).
  const double alpha = 1.7;
  const std::vector<Vec3> c{{0, 0, 0}, {40, 0, 0}};
  const auto r = compute_integrals(c, alpha);
  const double ref = -simpson([&](double x) {
    if (x == 0.0) return 0.0;
    const double phi = gaussian({x, 0, 0}, {0, 0, 0}, alpha);
    return 4 * kPi * x * phi * phi;
  }, 0.0, 10.0, 20000);
  // The distant nucleus at 40 bohr contributes -1/40 to a tight s function.
  const double kinetic = 1.5 * alpha;
  CHECK(r.core(0, 0) - kinetic == doctest::Approx(ref - 1.0 / 40.0).epsilon(1e-8));
  CHECK(r.nuclear_repulsion == doctest::Approx(1.0 / 40.0));
}

TEST_CASE("two-electron integrals: symmetry and limits") {
  const std::vector<Vec3> c{{0, 0, 0}, {1.4, 0, 0}, {0.3, 1.1, 0}};
  const auto r = compute_integrals(c, 1.2, 2);
  const auto& e = r.eri;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
          CHECK(e(i, j, k, l) == doctest::Approx(e(j, i, k, l)));
          CHECK(e(i, j, k, l) == doctest::Approx(e(k, l, i, j)));
        }
  // (aa|aa) for a normalized s Gaussian equals 2 sqrt(alpha / pi).
  CHECK(e(0, 0, 0, 0) == doctest::Approx(2.0 * std::sqrt(1.2 / kPi)));
  // (aa|bb) tends to 1/R for well-separated tight functions.
  const std::vector<Vec3> far{{0, 0, 0}, {30, 0, 0}};
  CHECK(compute_integrals(far, 5.0).eri(0, 0, 1, 1) == doctest::Approx(1.0 / 30.0).epsilon(1e-10));
}

TEST_CASE("coincident centers are rejected") {
  const std::vector<Vec3> c{{0, 0, 0}, {0, 0, 0}};
  CHECK_THROWS_AS(compute_integrals(c, 1.0), GeometryError);
  CHECK_THROWS_AS(compute_integrals(std::vector<Vec3>{{0, 0, 0}}, 0.0), DomainError);
}

TEST_CASE("thread count does not change the integrals") {
  const auto c = build_lattice(LatticeSpec{2, 3, 1.0, 2.0});
  const auto a = compute_integrals(c, 2.0, 1);
  const auto b = compute_integrals(c, 2.0, 4);
  CHECK(a.eri.data() == b.eri.data());
}
