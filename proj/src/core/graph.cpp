#include "openpack/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "openpack/error.hpp"

namespace openpack {

Graph::Graph(std::size_t n) : n_(n), stride_(VertexSet::word_count(n)), adj_(n * stride_, 0) {}

void Graph::link(Vertex u, Vertex v) noexcept {
  adj_[u * stride_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  adj_[v * stride_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::finish() {
  std::size_t degree_sum = 0;
  for (auto w : adj_) degree_sum += static_cast<std::size_t>(std::popcount(w));
  m_ = degree_sum / 2;
}

namespace {

void check_order(std::size_t n) {
  if (n == 0) fail(ErrorCode::invalid_argument, "graphs must have at least one vertex");
  if (n > kMaxGraphOrder) {
    fail(ErrorCode::cap_exceeded,
         "graph order " + std::to_string(n) + " exceeds the limit of " + std::to_string(kMaxGraphOrder));
  }
}

}  // namespace

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  check_order(n);
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      fail(ErrorCode::invalid_argument, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                            ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) fail(ErrorCode::invalid_argument, "loop at vertex " + std::to_string(u));
    g.link(u, v);
  }
  g.finish();
  return g;
}

Graph Graph::from_neighbor_sets(std::span<const VertexSet> rows) {
  const std::size_t n = rows.size();
  check_order(n);
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) {
    if (rows[v].universe() != n) fail(ErrorCode::invalid_argument, "neighbor set universe mismatch");
    if (rows[v].contains(v)) fail(ErrorCode::invalid_argument, "loop at vertex " + std::to_string(v));
    auto words = rows[v].words();
    std::copy(words.begin(), words.end(), g.adj_.begin() + static_cast<std::ptrdiff_t>(v * g.stride_));
  }
  for (Vertex u = 0; u < n; ++u) {
    rows[u].for_each([&](Vertex v) {
      if (!rows[v].contains(u)) fail(ErrorCode::invalid_argument, "neighbor sets are not symmetric");
    });
  }
  g.finish();
  return g;
}

VertexSet Graph::neighbors(Vertex v) const { return VertexSet::from_words(n_, neighbor_words(v)); }

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet s = neighbors(v);
  s.insert(v);
  return s;
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (auto w : neighbor_words(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexLabeling::VertexLabeling(std::vector<std::uint32_t> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) fail(ErrorCode::invalid_argument, "labeling of an empty vertex set");
  k_ = *std::max_element(labels_.begin(), labels_.end());
  std::vector<bool> seen(k_ + 1, false);
  for (auto l : labels_) {
    if (l == 0) fail(ErrorCode::invalid_argument, "labels start at 1");
    seen[l] = true;
  }
  for (std::uint32_t l = 1; l <= k_; ++l) {
    if (!seen[l]) fail(ErrorCode::invalid_argument, "label " + std::to_string(l) + " is unused");
  }
}

VertexLabeling VertexLabeling::normalized(std::span<const std::uint32_t> raw) {
  std::vector<std::uint32_t> mapping;
  std::vector<std::uint32_t> out;
  out.reserve(raw.size());
  for (auto l : raw) {
    auto it = std::find(mapping.begin(), mapping.end(), l);
    if (it == mapping.end()) {
      mapping.push_back(l);
      it = mapping.end() - 1;
    }
    out.push_back(static_cast<std::uint32_t>(it - mapping.begin()) + 1);
  }
  return VertexLabeling(std::move(out));
}

VertexSet VertexLabeling::class_members(std::uint32_t label) const {
  VertexSet s(labels_.size());
  for (Vertex v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) s.insert(v);
  }
  return s;
}

std::vector<VertexSet> VertexLabeling::partition() const {
  std::vector<VertexSet> parts(k_, VertexSet(labels_.size()));
  for (Vertex v = 0; v < labels_.size(); ++v) parts[labels_[v] - 1].insert(v);
  return parts;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  const VertexSet all = VertexSet::full(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet row = all - g.neighbors(v);
    row.erase(v);
    rows.push_back(std::move(row));
  }
  return Graph::from_neighbor_sets(rows);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  const auto shift = static_cast<Vertex>(g.order());
  for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edge_list(g.order() + h.order(), edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  const auto members = s.to_vector();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (g.adjacent(members[i], members[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edge_list(members.size(), edges);
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::size_t min_degree(const Graph& g) {
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::size_t isolated_vertex_count(const Graph& g) {
  std::size_t count = 0;
  for (Vertex v = 0; v < g.order(); ++v) count += g.degree(v) == 0 ? 1 : 0;
  return count;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](Vertex w) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

bool is_connected(const Graph& g) {
  const auto dist = distances_from(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      bool ok = true;
      g.neighbors(u).for_each([&](Vertex w) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool is_tree(const Graph& g) { return g.size() + 1 == g.order() && is_connected(g); }

bool is_regular(const Graph& g) { return max_degree(g) == min_degree(g); }

std::size_t eccentricity(const Graph& g, Vertex v) {
  if (v >= g.order()) fail(ErrorCode::invalid_argument, "vertex out of range");
  std::size_t best = 0;
  for (const auto& d : distances_from(g, v)) {
    if (!d) fail(ErrorCode::undefined, "infinite distance: graph is disconnected");
    best = std::max(best, *d);
  }
  return best;
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

std::optional<std::size_t> diameter_if_connected(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  return diameter(g);
}

}  // namespace openpack
