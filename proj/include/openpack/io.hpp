#pragma once

#include <string>
#include <string_view>

#include "openpack/graph.hpp"

namespace openpack {

/// Parses one graph6 record. Accepts an optional ">>graph6<<" prefix and a
/// trailing newline. Orders up to kMaxGraphOrder are accepted (the one-byte
/// and four-byte size headers). Padding bits in the last sextet must be zero.
Graph parse_graph6(std::string_view line);

/// Encodes g as graph6 without header or newline.
std::string to_graph6(const Graph& g);

/// Edge-list text: first line "n m", then m lines "u v" (0-indexed).
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace openpack
