#pragma once

#include <cstddef>
#include <utility>

#include "openpack/graph.hpp"

namespace openpack {

/// Row-major layout of V(G) x V(H): product vertex g * |V(H)| + h is the
/// pair (g, h).
class ProductVertexMap {
 public:
  ProductVertexMap(std::size_t g_order, std::size_t h_order) : g_order_(g_order), h_order_(h_order) {}

  std::size_t g_order() const noexcept { return g_order_; }
  std::size_t h_order() const noexcept { return h_order_; }
  std::size_t size() const noexcept { return g_order_ * h_order_; }
  Vertex index(Vertex g, Vertex h) const noexcept { return static_cast<Vertex>(g * h_order_ + h); }
  std::pair<Vertex, Vertex> pair(Vertex v) const noexcept {
    return {static_cast<Vertex>(v / h_order_), static_cast<Vertex>(v % h_order_)};
  }

 private:
  std::size_t g_order_;
  std::size_t h_order_;
};

/// Corona layout: vertices 0..|G|-1 are G itself; the copy H_i attached to
/// vertex i occupies [copy_begin(i), copy_begin(i) + |H|).
class CoronaLayout {
 public:
  CoronaLayout(std::size_t g_order, std::size_t h_order) : g_order_(g_order), h_order_(h_order) {}

  std::size_t g_order() const noexcept { return g_order_; }
  std::size_t h_order() const noexcept { return h_order_; }
  std::size_t size() const noexcept { return g_order_ * (1 + h_order_); }
  Vertex copy_begin(Vertex i) const noexcept { return static_cast<Vertex>(g_order_ + i * h_order_); }
  Vertex copy_vertex(Vertex i, Vertex h) const noexcept { return copy_begin(i) + h; }

 private:
  std::size_t g_order_;
  std::size_t h_order_;
};

template <typename Layout>
struct Product {
  Graph graph;
  Layout layout;
};

enum class ProductKind { cartesian, direct, strong, lexicographic };

Product<ProductVertexMap> graph_product(ProductKind kind, const Graph& g, const Graph& h);

inline Product<ProductVertexMap> cartesian(const Graph& g, const Graph& h) {
  return graph_product(ProductKind::cartesian, g, h);
}
inline Product<ProductVertexMap> direct(const Graph& g, const Graph& h) {
  return graph_product(ProductKind::direct, g, h);
}
inline Product<ProductVertexMap> strong(const Graph& g, const Graph& h) {
  return graph_product(ProductKind::strong, g, h);
}
inline Product<ProductVertexMap> lexicographic(const Graph& g, const Graph& h) {
  return graph_product(ProductKind::lexicographic, g, h);
}

Product<CoronaLayout> corona(const Graph& g, const Graph& h);

}  // namespace openpack
