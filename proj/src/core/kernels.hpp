#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "openpack/graph.hpp"

namespace openpack::detail {

using Mask = std::uint64_t;

/// Single-word adjacency for graphs with at most 64 vertices.
struct MaskGraph {
  int n = 0;
  std::array<Mask, 64> adj{};

  Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
};

/// Throws cap_exceeded when g is larger than solver_cap().
MaskGraph to_masks(const Graph& g);
MaskGraph complement_masks(const MaskGraph& g);

/// Colours 0..k-1, one per vertex, with k minimal.
std::vector<int> exact_coloring(const MaskGraph& g);
Mask exact_max_clique(const MaskGraph& g);
/// Minimum set whose closed (or open) neighborhoods cover every vertex.
/// Open covers require a graph without isolated vertices.
Mask exact_min_cover(const MaskGraph& g, bool open_neighborhoods);

VertexSet to_vertex_set(std::size_t n, Mask m);

}  // namespace openpack::detail
