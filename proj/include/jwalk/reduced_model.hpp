#pragma once

// The (k+1)-dimensional distance basis {|d_0>, ..., |d_k>} of a Johnson graph
// with one marked vertex: |d_i> is the normalized equal superposition of the
// vertices at distance i from the marked one. Because Johnson graphs are
// distance-transitive, the search Hamiltonian -gamma A - |w><w| leaves this
// subspace invariant.
//
// For k = 3 the module also provides the orthonormal basis change
// {|d_0>, |r>, |r'>, |r''>}, where |r> is the equal superposition of all
// unmarked vertices.

#include <cstdint>
#include <vector>

#include "jwalk/evolution.hpp"
#include "jwalk/johnson.hpp"
#include "jwalk/matrix.hpp"

namespace jwalk {

struct IntersectionArray {
  std::vector<std::int64_t> c;  // c_1..c_k   (index 0 holds c_1)
  std::vector<std::int64_t> a;  // a_0..a_k
  std::vector<std::int64_t> b;  // b_0..b_{k-1}

  // c_i with c_0 = 0.
  std::int64_t down(int i) const { return i == 0 ? 0 : c.at(i - 1); }
  std::int64_t same(int i) const { return a.at(i); }
  // b_i with b_k = 0.
  std::int64_t up(int i) const { return i == static_cast<int>(b.size()) ? 0 : b.at(i); }
  // c_i + a_i + b_i
  std::int64_t column_sum(int i) const { return down(i) + same(i) + up(i); }
};

// c_i = i^2, a_i = i (n - 2i), b_i = (k - i)(n - k - i). Requires n >= 2k.
IntersectionArray intersection_array(const JohnsonParams& params);

// Symmetric tridiagonal adjacency in the distance basis:
// diagonal a_i, off-diagonal sqrt(b_i c_{i+1}) = (i+1) sqrt((k-i)(n-k-i)).
Matrix reduced_adjacency(const JohnsonParams& params);

struct ReducedModel {
  JohnsonParams params;
  double gamma;
  Matrix adjacency;
  Matrix hamiltonian;  // -gamma * adjacency - |d_0><d_0|
  std::size_t marked_index = 0;
};

// Requires n >= 2k and a finite gamma >= 0 (gamma = 0 leaves the bare oracle).
ReducedModel search_hamiltonian(const JohnsonParams& params, double gamma);

// Equal superposition over all vertices, in the distance basis:
// component i is sqrt(|d_i| / N).
StateVector initial_state(const JohnsonParams& params);

// k = 3 only: T has columns |d_0>, |r>, |r'>, |r''> expressed in the
// {d_0, d_1, d_2, d_3} basis.
struct BasisChange {
  int n;
  Matrix t;
};

// Requires n >= 6.
BasisChange basis_change_T(int n);

// H' = T^T H T for J(n, 3) in the {d_0, r, r', r''} basis, evaluated in
// extended precision and rounded once. Requires n >= 6, gamma >= 0.
Matrix transformed_hamiltonian(int n, double gamma);

// The same matrix from its closed-form entries.
Matrix transformed_hamiltonian_closed_form(int n, double gamma);

}  // namespace jwalk
