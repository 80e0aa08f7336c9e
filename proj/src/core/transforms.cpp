#include "openpack/transforms.hpp"

#include <algorithm>
#include <functional>

namespace openpack {

Graph two_step(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> rows(n, VertexSet(n));
  // Every neighborhood becomes a clique.
  for (Vertex w = 0; w < n; ++w) {
    const VertexSet around = g.neighbors(w);
    around.for_each([&](Vertex u) { rows[u] |= around; });
  }
  for (Vertex v = 0; v < n; ++v) rows[v].erase(v);
  return Graph::from_neighbor_sets(rows);
}

Graph closed_neighborhood_graph(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (Vertex w = 0; w < n; ++w) {
    const VertexSet around = g.closed_neighbors(w);
    around.for_each([&](Vertex u) { rows[u] |= around; });
  }
  for (Vertex v = 0; v < n; ++v) rows[v].erase(v);
  return Graph::from_neighbor_sets(rows);
}

bool every_edge_on_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (!g.neighbors(u).intersects(g.neighbors(v))) return false;
  }
  return true;
}

std::vector<VertexSet> blocks(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Edge> stack;
  std::vector<VertexSet> out;
  int timer = 0;

  std::function<void(Vertex, int)> visit = [&](Vertex u, int parent) {
    disc[u] = low[u] = timer++;
    g.neighbors(u).for_each([&](Vertex w) {
      if (disc[w] == -1) {
        stack.emplace_back(u, w);
        visit(w, static_cast<int>(u));
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          VertexSet block(n);
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e == Edge{u, w}) break;
          }
          out.push_back(std::move(block));
        }
      } else if (static_cast<int>(w) != parent && disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    });
  };
  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] == -1) visit(v, -1);
  }
  return out;
}

bool has_even_cycle(const Graph& g) {
  for (const auto& block : blocks(g)) {
    const std::size_t k = block.size();
    if (k == 2) continue;
    std::size_t edges = 0;
    block.for_each([&](Vertex v) { edges += (g.neighbors(v) & block).size(); });
    edges /= 2;
    // A block that is not a cycle contains a theta subgraph, hence an even cycle.
    if (edges != k || k % 2 == 0) return true;
  }
  return false;
}

std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> done(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    bool have = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!done[v] && (!have || weight[v] > weight[pick])) {
        pick = v;
        have = true;
      }
    }
    done[pick] = true;
    order.push_back(pick);
    g.neighbors(pick).for_each([&](Vertex w) {
      if (!done[w]) ++weight[w];
    });
  }
  return order;
}

bool is_perfect_elimination_reverse(const Graph& g, const std::vector<Vertex>& order) {
  // Tarjan-Yannakakis: for each vertex, its earlier-visited neighbors minus
  // the latest of them must be adjacent to that latest one.
  const std::size_t n = g.order();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    VertexSet earlier(n);
    g.neighbors(v).for_each([&](Vertex w) {
      if (position[w] < i) earlier.insert(w);
    });
    if (earlier.empty()) continue;
    Vertex parent = earlier.first();
    earlier.for_each([&](Vertex w) {
      if (position[w] > position[parent]) parent = w;
    });
    earlier.erase(parent);
    if (!earlier.is_subset_of(g.neighbors(parent))) return false;
  }
  return true;
}

bool is_chordal(const Graph& g) { return is_perfect_elimination_reverse(g, maximum_cardinality_search(g)); }

}  // namespace openpack
