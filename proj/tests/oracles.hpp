#pragma once

// Independent reference computations for the tests. Nothing here calls the
// eigensolver or the propagator: the oracles must not share a code path with
// what they check.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "jwalk/johnson.hpp"
#include "jwalk/matrix.hpp"

namespace jwalk::oracle {

// C(n, k) by counting k-bit masks over n bits (n <= 24).
inline std::uint64_t count_subsets(int n, int k) {
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) == k) ++count;
  }
  return count;
}

// N x (k+1) isometry whose column i is the normalized indicator of class i.
inline Matrix class_projection(std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& classes) {
  Matrix p(vertex_count, classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const double w = 1.0 / std::sqrt(static_cast<double>(classes[i].size()));
    for (std::size_t v : classes[i]) p(v, i) = w;
  }
  return p;
}

// Counts, for each class i, the neighbors of one representative vertex in
// classes i-1, i, i+1 (c_i, a_i, b_i) on the brute-force graph.
struct CountedArray {
  std::vector<std::int64_t> c, a, b;
};
inline CountedArray count_intersection_array(const FullGraph& g, const std::vector<std::vector<std::size_t>>& classes) {
  std::vector<int> cls(g.vertex_count());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t v : classes[i]) cls[v] = static_cast<int>(i);
  CountedArray out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::size_t rep = classes[i].front();
    std::int64_t down = 0, same = 0, up = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!g.adjacent(rep, v)) continue;
      if (cls[v] + 1 == static_cast<int>(i)) ++down;
      if (cls[v] == static_cast<int>(i)) ++same;
      if (cls[v] == static_cast<int>(i) + 1) ++up;
    }
    if (i > 0) out.c.push_back(down);
    out.a.push_back(same);
    if (i + 1 < classes.size()) out.b.push_back(up);
  }
  return out;
}

using CVec = std::vector<std::complex<double>>;

// exp(-i H t) psi by scaling-and-squaring of a truncated Taylor series,
// applied to the vector: the step count is chosen so ||H|| t / s <= 0.5.
inline CVec taylor_evolve(const Matrix& h, const CVec& psi, double t) {
  const std::size_t n = psi.size();
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(h(i, j));
    norm = std::max(norm, row);
  }
  const int steps = std::max(1, static_cast<int>(std::ceil(norm * std::abs(t) / 0.5)));
  const double dt = t / steps;
  CVec state = psi;
  for (int s = 0; s < steps; ++s) {
    CVec term = state;
    CVec sum = state;
    for (int order = 1; order <= 30; ++order) {
      CVec next(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += h(i, j) * term[j];
        next[i] = acc * std::complex<double>(0.0, -dt / order);
      }
      term = std::move(next);
      for (std::size_t i = 0; i < n; ++i) sum[i] += term[i];
    }
    state = std::move(sum);
  }
  return state;
}

inline double det3(const Matrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Coefficients (l^3, l^2, l, 1) of det(M - l I) from the matrix invariants:
// -l^3 + tr(M) l^2 - (sum of principal 2x2 minors) l + det(M).
inline std::array<double, 4> char_poly_invariants(const Matrix& m) {
  const double tr = m(0, 0) + m(1, 1) + m(2, 2);
  const double minors = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) + (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
                        (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
  return {-1.0, tr, -minors, det3(m)};
}

// Coefficients of det(M - l I) by sampling it at four points and solving the
// Vandermonde system (Gaussian elimination with partial pivoting).
inline std::array<double, 4> char_poly_fit(const Matrix& m, std::array<double, 4> samples = {-2.0, -1.0, 0.0, 1.0}) {
  std::array<std::array<double, 5>, 4> a{};
  for (int r = 0; r < 4; ++r) {
    const double l = samples[r];
    Matrix shifted = m;
    for (int i = 0; i < 3; ++i) shifted(i, i) -= l;
    a[r] = {l * l * l, l * l, l, 1.0, det3(shifted)};
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 5; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = a[i][4] / a[i][i];
  return out;
}

inline Matrix random_symmetric(std::size_t n, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> d(0.0, scale);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

inline CVec random_unit_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  CVec v(n);
  double s = 0.0;
  for (auto& z : v) {
    z = {d(rng), d(rng)};
    s += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(s);
  return v;
}

}  // namespace jwalk::oracle
