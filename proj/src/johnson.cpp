#include "jwalk/johnson.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "jwalk/errors.hpp"

namespace jwalk {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("binomial: need 0 <= k <= n (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  k = std::min(k, n - k);
  // After step i the accumulator holds C(n - k + i, i), so acc * m / i is an
  // integer; dividing i's common factor out of acc first makes m / (i / g) exact.
  std::uint64_t acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    const auto m = static_cast<std::uint64_t>(n - k + i);
    const auto g = std::gcd(acc, static_cast<std::uint64_t>(i));
    const std::uint64_t factor = m / (static_cast<std::uint64_t>(i) / g);
    if (__builtin_mul_overflow(acc / g, factor, &acc)) {
      throw DomainError("binomial: C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
    }
  }
  return acc;
}

JohnsonParams::JohnsonParams(int n, int k) : n_(n), k_(k) {
  if (k < 1 || k >= n) {
    throw DomainError("Johnson graph J(n,k) needs 1 <= k < n (got n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                      ")");
  }
}

std::uint64_t JohnsonParams::vertex_count() const { return binomial(n_, k_); }

void JohnsonParams::require_reduced_model(const char* what) const {
  if (!supports_reduced_model()) {
    throw DomainError(std::string(what) + ": requires n >= 2k (got n=" + std::to_string(n_) +
                      ", k=" + std::to_string(k_) + ")");
  }
}

std::vector<VertexId> enumerate_vertices(const JohnsonParams& params) {
  const int n = params.n();
  const int k = params.k();
  std::vector<VertexId> out;
  out.reserve(params.vertex_count());

  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    out.push_back({out.size(), subset});
    // Advance to the next combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

int overlap(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

FullGraph full_adjacency(const JohnsonParams& params, std::size_t vertex_cap) {
  const std::uint64_t count = params.vertex_count();
  if (count > vertex_cap) {
    throw ResourceError("J(" + std::to_string(params.n()) + "," + std::to_string(params.k()) + ") has " +
                        std::to_string(count) + " vertices, above the brute-force cap of " +
                        std::to_string(vertex_cap) + " (raise it with --cap)");
  }
  auto vertices = enumerate_vertices(params);
  const std::size_t n = vertices.size();
  const int k = params.k();
  std::vector<std::uint8_t> adjacency(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (overlap(vertices[u].subset, vertices[v].subset) == k - 1) {
        adjacency[u * n + v] = 1;
        adjacency[v * n + u] = 1;
      }
    }
  }
  return FullGraph(params, std::move(vertices), std::move(adjacency));
}

Matrix FullGraph::adjacency_matrix() const {
  const std::size_t n = vertices_.size();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = adjacency_[i * n + j];
  return a;
}

int FullGraph::distance(std::size_t u, std::size_t v) const {
  return params_.k() - overlap(vertices_.at(u).subset, vertices_.at(v).subset);
}

std::vector<std::vector<std::size_t>> distance_classes(const FullGraph& graph, std::size_t marked) {
  if (marked >= graph.vertex_count()) throw DomainError("distance_classes: marked vertex out of range");
  const auto& p = graph.params();
  std::vector<std::vector<std::size_t>> classes(std::min(p.k(), p.n() - p.k()) + 1);
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) classes[graph.distance(marked, v)].push_back(v);
  return classes;
}

std::vector<int> bfs_distances(const FullGraph& graph, std::size_t source) {
  const std::size_t n = graph.vertex_count();
  if (source >= n) throw DomainError("bfs_distances: source out of range");
  std::vector<int> dist(n, -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] < 0 && graph.adjacent(u, v)) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::uint64_t> class_sizes(const JohnsonParams& params) {
  params.require_reduced_model("class_sizes");
  const int n = params.n();
  const int k = params.k();
  std::vector<std::uint64_t> sizes(k + 1);
  for (int i = 0; i <= k; ++i) {
    if (__builtin_mul_overflow(binomial(k, i), binomial(n - k, i), &sizes[i])) {
      throw DomainError("class_sizes: |d_" + std::to_string(i) + "| overflows 64 bits");
    }
  }
  return sizes;
}

}  // namespace jwalk
