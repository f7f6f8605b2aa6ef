#include "superfast/lattice_integrals.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "superfast/errors.hpp"

namespace superfast {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoysSwitch = 12.0;

double distance2(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return dx * dx + dy * dy + dz * dz;
}

Vec3 midpoint(const Vec3& a, const Vec3& b) {
  return {0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]), 0.5 * (a[2] + b[2])};
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::size_t LatticeSpec::atom_count() const {
  std::size_t n = 1;
  for (int d = 0; d < dimension; ++d) n *= static_cast<std::size_t>(side_length);
  return n;
}

void LatticeSpec::validate() const {
  if (dimension < 1 || dimension > 3) throw ValidationError("lattice dimension must be 1, 2 or 3");
  if (side_length < 1) throw ValidationError("lattice side length must be >= 1");
  if (!(spacing_angstrom > 0.0)) throw ValidationError("lattice spacing must be positive");
  if (!(exponent > 0.0)) throw ValidationError("Gaussian exponent must be positive");
}

std::vector<Vec3> build_lattice(const LatticeSpec& spec) {
  spec.validate();
  const double h = spec.spacing_angstrom * kBohrPerAngstrom;
  const auto n = static_cast<std::size_t>(spec.side_length);
  std::vector<Vec3> centers;
  centers.reserve(spec.atom_count());
  for (std::size_t idx = 0; idx < spec.atom_count(); ++idx) {
    Vec3 c{0.0, 0.0, 0.0};
    std::size_t rest = idx;
    for (int d = spec.dimension - 1; d >= 0; --d) {
      c[static_cast<std::size_t>(d)] = h * static_cast<double>(rest % n);
      rest /= n;
    }
    centers.push_back(c);
  }
  return centers;
}

double boys_f0(double t) {
  if (!(t >= 0.0)) throw DomainError("boys_f0: argument must be non-negative");
  if (t < kBoysSwitch) {
    // F0(t) = exp(-t) sum_k (2t)^k / (2k+1)!!, all terms positive.
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
      term *= 2.0 * t / (2.0 * k + 1.0);
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return std::exp(-t) * sum;
  }
  const double rt = std::sqrt(t);
  return 0.5 * std::sqrt(kPi / t) * std::erf(rt);
}

RawIntegrals compute_integrals(std::span<const Vec3> centers, double alpha,
                               unsigned threads) {
  if (!(alpha > 0.0)) throw DomainError("compute_integrals: alpha must be positive");
  const std::size_t m = centers.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (distance2(centers[i], centers[j]) < 1e-20) {
        throw GeometryError("coincident centers " + std::to_string(j) + " and " +
                            std::to_string(i));
      }
    }
  }

  // Equal exponents everywhere: p = 2 alpha, reduced exponent mu = alpha / 2.
  const double norm2 = std::pow(2.0 * alpha / kPi, 1.5);
  const double p = 2.0 * alpha;
  const double mu = 0.5 * alpha;

  RawIntegrals out;
  out.overlap = Matrix(m, m);
  out.core = Matrix(m, m);
  out.eri = Tensor4(m);

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double r2 = distance2(centers[i], centers[j]);
      const double s = norm2 * std::pow(kPi / p, 1.5) * std::exp(-mu * r2);
      const double t = mu * (3.0 - 2.0 * mu * r2) * s;
      const Vec3 pc = midpoint(centers[i], centers[j]);
      double v = 0.0;
      for (const auto& c : centers) {
        v -= norm2 * (2.0 * kPi / p) * std::exp(-mu * r2) *
             boys_f0(p * distance2(pc, c));
      }
      out.overlap(i, j) = out.overlap(j, i) = s;
      out.core(i, j) = out.core(j, i) = t + v;
    }
  }

  // (ij|kl) with both pair exponents equal to p:
  //   N^4 2 pi^{5/2} / (p^2 sqrt(2p)) exp(-mu R_ij^2 - mu R_kl^2)
  //   * F0(p/2 |P - Q|^2)
  const double eri_prefactor =
      norm2 * norm2 * 2.0 * std::pow(kPi, 2.5) / (p * p * std::sqrt(2.0 * p));
  std::vector<std::size_t> pair_i;
  std::vector<std::size_t> pair_j;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      pair_i.push_back(i);
      pair_j.push_back(j);
    }
  }
  const std::size_t npairs = pair_i.size();
  std::vector<double> pair_exp(npairs);
  std::vector<Vec3> pair_center(npairs);
  for (std::size_t a = 0; a < npairs; ++a) {
    pair_exp[a] = std::exp(-mu * distance2(centers[pair_i[a]], centers[pair_j[a]]));
    pair_center[a] = midpoint(centers[pair_i[a]], centers[pair_j[a]]);
  }

  // Each worker owns a disjoint set of bra pairs a; it writes the 8
  // permutations of (a, b) for b <= a, so no two workers touch one element.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t a = next.fetch_add(1);
      if (a >= npairs) return;
      const std::size_t i = pair_i[a];
      const std::size_t j = pair_j[a];
      for (std::size_t b = 0; b <= a; ++b) {
        const std::size_t k = pair_i[b];
        const std::size_t l = pair_j[b];
        const double val = eri_prefactor * pair_exp[a] * pair_exp[b] *
                           boys_f0(0.5 * p * distance2(pair_center[a], pair_center[b]));
        auto& e = out.eri;
        e(i, j, k, l) = e(j, i, k, l) = e(i, j, l, k) = e(j, i, l, k) = val;
        e(k, l, i, j) = e(l, k, i, j) = e(k, l, j, i) = e(l, k, j, i) = val;
      }
    }
  };
  const unsigned nthreads =
      std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(npairs, 1)));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      out.nuclear_repulsion += 1.0 / std::sqrt(distance2(centers[i], centers[j]));
    }
  }
  return out;
}

}  // namespace superfast
