#include "superfast/basis_rotation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "superfast/errors.hpp"

namespace superfast {

namespace {

void require_square_symmetric(const Matrix& s, const char* who) {
  if (s.rows() != s.cols()) throw DimensionMismatchError(std::string(who) + ": overlap not square");
  if (s.asymmetry() > 1e-10) throw ValidationError(std::string(who) + ": overlap not symmetric");
}

// Transforms the leading index and moves it to the back:
//   out[r][a] = sum_i x(i, a) in[i][r].
// Four calls transform every index and restore the original index order.
std::vector<double> quarter_transform(const std::vector<double>& in,
                                      std::size_t n_in_first, std::size_t rest_a,
                                      std::size_t rest_b, std::size_t rest_c,
                                      const Matrix& x, unsigned threads) {
  const std::size_t k = x.cols();
  const std::size_t rest = rest_a * rest_b * rest_c;
  std::vector<double> out(rest * k, 0.0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t r = next.fetch_add(1);
      if (r >= rest) return;
      double* dst = out.data() + r * k;
      for (std::size_t i = 0; i < n_in_first; ++i) {
        const double v = in[i * rest + r];
        if (v == 0.0) continue;
        for (std::size_t a = 0; a < k; ++a) dst[a] += x(i, a) * v;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return out;
}

}  // namespace

Orthogonalizer symmetric_orthogonalizer(const Matrix& overlap) {
  require_square_symmetric(overlap, "symmetric_orthogonalizer");
  const auto eig = jacobi_eigen(overlap);
  const std::size_t m = overlap.rows();
  if (m > 0 && eig.values.front() < kLinearDependenceFloor) {
    throw LinearDependenceError(
        "overlap eigenvalue " + std::to_string(eig.values.front()) +
        " below linear-dependence floor; use the canonical orthogonalizer");
  }
  Orthogonalizer out;
  out.kind = OrthogonalizerKind::Symmetric;
  out.x = Matrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double v = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        v += eig.vectors(i, k) * eig.vectors(j, k) / std::sqrt(eig.values[k]);
      }
      out.x(i, j) = out.x(j, i) = v;
    }
  }
  return out;
}

Orthogonalizer canonical_orthogonalizer(const Matrix& overlap, double threshold) {
  require_square_symmetric(overlap, "canonical_orthogonalizer");
  if (threshold < 0.0) throw DomainError("canonical_orthogonalizer: threshold must be >= 0");
  const auto eig = jacobi_eigen(overlap);
  const std::size_t m = overlap.rows();

  Orthogonalizer out;
  out.kind = OrthogonalizerKind::Canonical;
  std::vector<std::size_t> kept;
  for (std::size_t k = m; k-- > 0;) {
    if (eig.values[k] >= threshold && eig.values[k] > 0.0) {
      kept.push_back(k);
    } else {
      out.dropped_eigenvalues.push_back(eig.values[k]);
    }
  }
  if (kept.empty()) throw EmptyBasisError("canonical_orthogonalizer: every eigenvalue below threshold");
  out.x = Matrix(m, kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const double scale = 1.0 / std::sqrt(eig.values[kept[c]]);
    for (std::size_t r = 0; r < m; ++r) out.x(r, c) = eig.vectors(r, kept[c]) * scale;
  }
  return out;
}

SpatialIntegrals rotate_integrals(const RawIntegrals& raw, const Matrix& x,
                                  unsigned threads) {
  const std::size_t m = raw.core.rows();
  if (x.rows() != m || raw.overlap.rows() != m || raw.eri.extent() != m) {
    throw DimensionMismatchError("rotate_integrals: transformation does not match the basis");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t k = x.cols();
  const Matrix xt = x.transpose();

  SpatialIntegrals out;
  out.one_body = xt * raw.core * x;
  out.overlap = xt * raw.overlap * x;
  out.constant = raw.nuclear_repulsion;

  // Layout cycles [i][j][k][l] -> [j][k][l][a] -> ... -> [a][b][c][d].
  std::vector<double> t = quarter_transform(raw.eri.data(), m, m, m, m, x, threads);
  t = quarter_transform(t, m, m, m, k, x, threads);
  t = quarter_transform(t, m, m, k, k, x, threads);
  t = quarter_transform(t, m, k, k, k, x, threads);
  out.two_body = Tensor4(k);
  out.two_body.data() = std::move(t);
  return out;
}

}  // namespace superfast
