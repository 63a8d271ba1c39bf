#include "jwalk/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "jwalk/errors.hpp"
#include "jwalk/simd/kernels.hpp"

namespace jwalk {
namespace {

struct Norms {
  double off;
  double diag;
};

Norms norms(const Matrix& a) {
  const std::size_t n = a.rows();
  double off = 0.0;
  double diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    diag += a(i, i) * a(i, i);
    for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
  }
  return {std::sqrt(2.0 * off), std::sqrt(diag)};
}

// One Jacobi rotation zeroing a(p, q), p < q. Rows p and q are rotated with
// the SIMD kernel; the matching columns are then restored by symmetry.
void rotate_pivot(Matrix& a, Matrix& vt, std::size_t p, std::size_t q, const simd::KernelTable& k) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double app = a(p, p);
  const double aqq = a(q, q);
  const double theta = (aqq - app) / (2.0 * apq);
  double t = 1.0 / (std::abs(theta) + std::hypot(theta, 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t n = a.rows();
  k.rotate(a.row(p).data(), a.row(q).data(), n, c, s);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == p || j == q) continue;
    a(j, p) = a(p, j);
    a(j, q) = a(q, j);
  }
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  k.rotate(vt.row(p).data(), vt.row(q).data(), n, c, s);
}

void canonicalize_sign(std::span<double> v) {
  for (double x : v) {
    if (std::abs(x) > 1e-8) {
      if (x < 0.0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

}  // namespace

Matrix SpectralDecomposition::reconstruct() const {
  const std::size_t n = dimension();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = eigenvector(i);
    for (std::size_t r = 0; r < n; ++r) simd::axpy(eigenvalues[i] * v[r], v, out.row(r));
  }
  return out;
}

SpectralDecomposition eig_sym(const Matrix& m, const JacobiOptions& options) {
  if (!m.square()) throw DomainError("eig_sym: matrix is not square");
  const double scale = m.max_abs();
  if (m.asymmetry() > options.symmetry_tolerance * scale) {
    std::ostringstream msg;
    msg << "eig_sym: matrix is not symmetric (max |a_ij - a_ji| = " << m.asymmetry() << ")";
    throw DomainError(msg.str());
  }
  for (double x : m.data()) {
    if (!std::isfinite(x)) throw DomainError("eig_sym: matrix has non-finite entries");
  }

  const std::size_t n = m.rows();
  Matrix a = m;
  // Symmetrize exactly; the solver only ever reads rows.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(j, i) = a(i, j);
  Matrix vt = Matrix::identity(n);
  const auto& kernels = simd::kernels();

  int sweep = 0;
  for (;; ++sweep) {
    const Norms nm = norms(a);
    if (nm.off == 0.0 || nm.off < options.off_diagonal_tolerance * nm.diag) break;
    if (sweep == options.max_sweeps) {
      std::ostringstream msg;
      msg << "eig_sym: no convergence after " << options.max_sweeps << " sweeps (off-diagonal norm " << nm.off
          << ", diagonal norm " << nm.diag << ")";
      throw ConvergenceError(msg.str(), nm.off);
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate_pivot(a, vt, p, q, kernels);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SpectralDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.eigenvalues[i] = a(order[i], order[i]);
    auto dst = out.vectors_t.row(i);
    const auto src = vt.row(order[i]);
    std::copy(src.begin(), src.end(), dst.begin());
    canonicalize_sign(dst);
  }
  return out;
}

}  // namespace jwalk
