#include "openpack/products.hpp"

#include <string>
#include <vector>

#include "openpack/error.hpp"

namespace openpack {

namespace {

void check_product_order(std::size_t n) {
  if (n > kMaxGraphOrder) {
    fail(ErrorCode::cap_exceeded, "product would have " + std::to_string(n) + " vertices; the limit is " +
                                      std::to_string(kMaxGraphOrder));
  }
}

bool product_adjacent(ProductKind kind, const Graph& g, const Graph& h, Vertex g1, Vertex h1, Vertex g2, Vertex h2) {
  const bool g_adj = g.adjacent(g1, g2);
  const bool h_adj = h.adjacent(h1, h2);
  const bool box = (g_adj && h1 == h2) || (g1 == g2 && h_adj);
  switch (kind) {
    case ProductKind::cartesian:
      return box;
    case ProductKind::direct:
      return g_adj && h_adj;
    case ProductKind::strong:
      return box || (g_adj && h_adj);
    case ProductKind::lexicographic:
      return g_adj || (g1 == g2 && h_adj);
  }
  return false;
}

}  // namespace

Product<ProductVertexMap> graph_product(ProductKind kind, const Graph& g, const Graph& h) {
  const ProductVertexMap layout(g.order(), h.order());
  check_product_order(layout.size());
  std::vector<Edge> edges;
  for (Vertex a = 0; a < layout.size(); ++a) {
    const auto [g1, h1] = layout.pair(a);
    for (Vertex b = a + 1; b < layout.size(); ++b) {
      const auto [g2, h2] = layout.pair(b);
      if (product_adjacent(kind, g, h, g1, h1, g2, h2)) edges.emplace_back(a, b);
    }
  }
  return {Graph::from_edge_list(layout.size(), edges), layout};
}

Product<CoronaLayout> corona(const Graph& g, const Graph& h) {
  const CoronaLayout layout(g.order(), h.order());
  check_product_order(layout.size());
  std::vector<Edge> edges = g.edges();
  const auto h_edges = h.edges();
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex x = 0; x < h.order(); ++x) edges.emplace_back(i, layout.copy_vertex(i, x));
    for (auto [x, y] : h_edges) edges.emplace_back(layout.copy_vertex(i, x), layout.copy_vertex(i, y));
  }
  return {Graph::from_edge_list(layout.size(), edges), layout};
}

}  // namespace openpack
