#pragma once

#include <vector>

#include "openpack/graph.hpp"

namespace openpack {

/// Two-step graph: u ~ v iff u != v and they share a neighbor in g.
/// Independent sets of the result are exactly the open packings of g.
Graph two_step(const Graph& g);

/// Closed neighborhood graph: u ~ v iff u != v and N[u] and N[v] meet.
/// Equal to the square of g; independent sets are the packings of g.
Graph closed_neighborhood_graph(const Graph& g);
inline Graph square(const Graph& g) { return closed_neighborhood_graph(g); }

bool every_edge_on_triangle(const Graph& g);

/// Biconnected blocks, each as its vertex set. Isolated vertices form no block.
std::vector<VertexSet> blocks(const Graph& g);

/// True iff g contains a cycle of even length, decided from the block
/// structure: g is even-cycle-free iff every block is an edge or an odd cycle.
bool has_even_cycle(const Graph& g);

/// Maximum cardinality search order; element i is the i-th vertex visited.
std::vector<Vertex> maximum_cardinality_search(const Graph& g);

/// True iff the reverse of `order` is a perfect elimination ordering.
bool is_perfect_elimination_reverse(const Graph& g, const std::vector<Vertex>& order);

bool is_chordal(const Graph& g);

}  // namespace openpack
