#pragma once

#include <cstdint>
#include <functional>

#include "openpack/graph.hpp"

namespace openpack {

// Vertex i of every generator corresponds to v_{i+1} in the usual 1-based
// naming of a family.

/// v0 - v1 - ... - v(n-1).
Graph path(std::size_t n);
/// Path plus the edge v(n-1) v0; requires n >= 3.
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// Sides {0..a-1} and {a..a+b-1}. Either side may be empty (a + b >= 1);
/// the result is then edgeless.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// K_{1,n-1} with center 0.
Graph star(std::size_t n);
Graph empty_graph(std::size_t n);
/// G(n, p): each pair u < v, visited in lexicographic order, becomes an
/// edge when a 53-bit uniform draw from mt19937_64(seed) falls below p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);
/// Uniform labeled tree decoded from a Pruefer sequence drawn with
/// mt19937_64(seed).
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Every labeled simple graph on n vertices, one per edge subset.
///
/// Subset index k has pair number p (pairs ordered column-wise: (0,1),
/// (0,2), (1,2), (0,3), ...) as an edge iff bit p of k is set.
class GraphEnumerator {
 public:
  static constexpr std::size_t kMaxOrder = 7;

  explicit GraphEnumerator(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return std::uint64_t{1} << pairs_.size(); }
  Graph at(std::uint64_t index) const;

  void for_each(const std::function<void(const Graph&)>& fn) const {
    for (std::uint64_t k = 0; k < count(); ++k) fn(at(k));
  }

 private:
  std::size_t n_;
  std::vector<Edge> pairs_;
};

}  // namespace openpack
