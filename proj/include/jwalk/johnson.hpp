#pragma once

// Combinatorial construction of Johnson graphs J(n, k): vertices are the
// k-subsets of {0, ..., n-1}, adjacent when they share exactly k-1 symbols.
// The full graph is built explicitly and serves as the brute-force reference
// for the reduced distance-basis model.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jwalk/matrix.hpp"

namespace jwalk {

// C(n, k) exactly. Throws DomainError when k < 0, k > n, or the result does
// not fit in 64 bits.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

class JohnsonParams {
 public:
  // Requires 1 <= k < n.
  JohnsonParams(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  // C(n, k).
  std::uint64_t vertex_count() const;
  // k (n - k)
  std::int64_t degree() const noexcept { return std::int64_t{k_} * (n_ - k_); }

  // The distance basis has exactly k + 1 classes iff n >= 2k.
  bool supports_reduced_model() const noexcept { return n_ >= 2 * k_; }
  // Throws DomainError naming `what` unless n >= 2k.
  void require_reduced_model(const char* what) const;

  friend bool operator==(const JohnsonParams&, const JohnsonParams&) = default;

 private:
  int n_;
  int k_;
};

struct VertexId {
  std::size_t index;
  std::vector<int> subset;  // sorted, k entries in [0, n)
};

// All k-subsets in lexicographic order; index == position.
std::vector<VertexId> enumerate_vertices(const JohnsonParams& params);

// Size of |a ∩ b| for sorted subsets.
int overlap(const std::vector<int>& a, const std::vector<int>& b);

inline constexpr std::size_t kDefaultVertexCap = 4000;

class FullGraph {
 public:
  const JohnsonParams& params() const noexcept { return params_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const VertexId& vertex(std::size_t i) const { return vertices_.at(i); }

  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u * vertices_.size() + v] != 0; }
  // Adjacency as a dense real matrix (for the spectral code).
  Matrix adjacency_matrix() const;

  // k - |subset(u) ∩ subset(v)|
  int distance(std::size_t u, std::size_t v) const;

 private:
  friend FullGraph full_adjacency(const JohnsonParams&, std::size_t);
  FullGraph(JohnsonParams p, std::vector<VertexId> v, std::vector<std::uint8_t> a)
      : params_(p), vertices_(std::move(v)), adjacency_(std::move(a)) {}

  JohnsonParams params_;
  std::vector<VertexId> vertices_;
  std::vector<std::uint8_t> adjacency_;  // N x N, row-major
};

// Throws ResourceError when C(n, k) exceeds `vertex_cap`.
FullGraph full_adjacency(const JohnsonParams& params, std::size_t vertex_cap = kDefaultVertexCap);

// Vertex indices grouped by distance from `marked`, using the overlap formula.
// There are min(k, n - k) + 1 classes.
std::vector<std::vector<std::size_t>> distance_classes(const FullGraph& graph, std::size_t marked);

// Hop distances from `source` by breadth-first search (-1 if unreachable).
std::vector<int> bfs_distances(const FullGraph& graph, std::size_t source);

// |d_i| = C(k, i) C(n - k, i) for i = 0..k. Requires n >= 2k.
std::vector<std::uint64_t> class_sizes(const JohnsonParams& params);

}  // namespace jwalk
