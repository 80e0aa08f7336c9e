#include "openpack/generators.hpp"

#include <queue>
#include <string>

#include "openpack/error.hpp"
#include "random.hpp"

namespace openpack {

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edge_list(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) fail(ErrorCode::invalid_argument, "cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(static_cast<Vertex>(n - 1), 0);
  return Graph::from_edge_list(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  }
  return Graph::from_edge_list(a + b, edges);
}

Graph star(std::size_t n) {
  if (n == 0) fail(ErrorCode::invalid_argument, "star needs at least one vertex");
  return complete_bipartite(1, n - 1);
}

Graph empty_graph(std::size_t n) { return Graph::from_edge_list(n, {}); }

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::invalid_argument, "edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (detail::uniform_unit(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n <= 2) return path(n);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(detail::uniform_below(rng, n));

  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (auto c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph::from_edge_list(n, edges);
}

GraphEnumerator::GraphEnumerator(std::size_t n) : n_(n) {
  if (n == 0) fail(ErrorCode::invalid_argument, "enumeration needs at least one vertex");
  if (n > kMaxOrder) {
    fail(ErrorCode::cap_exceeded, "exhaustive enumeration is limited to n <= 7, got " + std::to_string(n));
  }
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs_.emplace_back(i, j);
  }
}

Graph GraphEnumerator::at(std::uint64_t index) const {
  if (index >= count()) fail(ErrorCode::invalid_argument, "enumeration index out of range");
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    if ((index >> p) & 1U) edges.push_back(pairs_[p]);
  }
  return Graph::from_edge_list(n_, edges);
}

}  // namespace openpack
