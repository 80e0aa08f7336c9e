#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "openpack/vertex_set.hpp"

namespace openpack {

using Edge = std::pair<Vertex, Vertex>;

/// Largest order any Graph may have. Products are capped at the same size.
inline constexpr std::size_t kMaxGraphOrder = 4096;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is one contiguous block of n rows of ceil(n/64) words, so a
/// graph with n <= 128 carries at most two words per vertex. Every instance
/// satisfies symmetry and has no loops; n is always at least 1.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate pairs collapse; (u, v) and
  /// (v, u) are the same edge. Throws on n == 0, n > kMaxGraphOrder, an
  /// endpoint >= n, or a loop.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Builds from per-vertex neighbor sets; asserts symmetry and no loops.
  static Graph from_neighbor_sets(std::span<const VertexSet> rows);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return ((adj_[u * stride_ + (v >> 6)] >> (v & 63)) & 1U) != 0;
  }
  std::span<const std::uint64_t> neighbor_words(Vertex v) const noexcept {
    return {adj_.data() + v * stride_, stride_};
  }
  VertexSet neighbors(Vertex v) const;
  VertexSet closed_neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const noexcept;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::size_t n);
  void link(Vertex u, Vertex v) noexcept;
  void finish();

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// A total function V -> {1..k} in which every label in 1..k is used.
class VertexLabeling {
 public:
  VertexLabeling() = default;
  /// Validates that labels are exactly {1..k} for k = max label.
  explicit VertexLabeling(std::vector<std::uint32_t> labels);
  /// Renumbers arbitrary labels to 1..k in order of first appearance.
  static VertexLabeling normalized(std::span<const std::uint32_t> raw);

  std::size_t order() const noexcept { return labels_.size(); }
  std::uint32_t classes() const noexcept { return k_; }
  std::uint32_t operator[](Vertex v) const noexcept { return labels_[v]; }
  std::span<const std::uint32_t> labels() const noexcept { return labels_; }
  /// Members carrying label i, 1 <= i <= classes().
  VertexSet class_members(std::uint32_t label) const;
  std::vector<VertexSet> partition() const;

  friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;

 private:
  std::vector<std::uint32_t> labels_;
  std::uint32_t k_ = 0;
};

Graph complement(const Graph& g);
/// Block-diagonal union: vertices of h follow those of g.
Graph disjoint_union(const Graph& g, const Graph& h);
/// Subgraph induced by the members of s, relabeled 0..|s|-1 in index order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

std::size_t max_degree(const Graph& g);
std::size_t min_degree(const Graph& g);
std::size_t isolated_vertex_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);
bool is_regular(const Graph& g);

/// BFS distances from source; unreachable vertices get std::nullopt.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source);
/// Throws ErrorCode::undefined ("infinite distance") when g is disconnected.
std::size_t eccentricity(const Graph& g, Vertex v);
std::size_t diameter(const Graph& g);
/// Diameter, or std::nullopt for a disconnected graph.
std::optional<std::size_t> diameter_if_connected(const Graph& g);

}  // namespace openpack
