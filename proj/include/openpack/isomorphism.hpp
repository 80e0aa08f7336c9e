#pragma once

#include <optional>
#include <vector>

#include "openpack/graph.hpp"

namespace openpack {

inline constexpr std::size_t kMaxIsomorphismOrder = 16;

/// Adjacency-preserving bijection g -> h (result[v] is the image of v), or
/// std::nullopt when the graphs are not isomorphic. Colour refinement prunes
/// the backtracking search. Throws cap_exceeded above kMaxIsomorphismOrder.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace openpack
