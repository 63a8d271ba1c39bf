#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jwalk/matrix.hpp"

namespace jwalk {

// Ascending eigenvalues of a real symmetric matrix with an orthonormal set of
// eigenvectors. Eigenvectors are stored as the ROWS of `vectors_t` (i.e. the
// transpose of the usual column matrix V) so each one is contiguous.
//
// Sign convention: the first component of each eigenvector whose magnitude
// exceeds 1e-8 is non-negative.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  Matrix vectors_t;

  std::size_t dimension() const noexcept { return eigenvalues.size(); }
  std::span<const double> eigenvector(std::size_t i) const { return vectors_t.row(i); }
  // Column matrix V with V(:, i) the i-th eigenvector.
  Matrix vectors() const { return vectors_t.transpose(); }
  // V diag(eigenvalues) V^T
  Matrix reconstruct() const;
};

struct JacobiOptions {
  double symmetry_tolerance = 1e-12;   // relative to max |a_ij|
  double off_diagonal_tolerance = 1e-13;  // relative to the diagonal's Frobenius norm
  int max_sweeps = 100;
};

// Cyclic Jacobi eigensolver. Throws DomainError for non-square or
// non-symmetric input and ConvergenceError if the sweep cap is reached.
SpectralDecomposition eig_sym(const Matrix& m, const JacobiOptions& options = {});

}  // namespace jwalk
