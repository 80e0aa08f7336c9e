#pragma once

#include <cstdint>
#include <optional>

#include "openpack/graph.hpp"

namespace openpack {

/// Labels a tree with exactly max_degree(t) open packing classes in linear
/// time.
///
/// The root is the lowest-index vertex of maximum degree and gets label 1.
/// Its children, in ascending index order, get labels 1..Delta. Every other
/// vertex hands its children the smallest labels in 1..Delta that differ from
/// its own parent's label, children again in ascending index order, vertices
/// processed in BFS order. Throws hypothesis when t is not a tree or has
/// fewer than two vertices.
VertexLabeling tree_opp(const Graph& t);

/// Parameters of one member of the regular equality family: r parts of even
/// size s, so n = r * s.
struct PsiSpec {
  std::size_t r = 2;
  std::size_t s = 2;
};

/// Part i occupies vertices [i*s, (i+1)*s). Vertex k of part i is matched to
/// vertex k of every other part, and inside each part vertices 2t and 2t+1
/// are paired. The result is r-regular with n*r/2 edges.
Graph psi_graph(PsiSpec spec);

/// The partition {X_1, ..., X_r} of psi_graph(spec) as a labeling.
VertexLabeling psi_parts(PsiSpec spec);

/// True iff the classes of f all have `part_size` vertices, each class
/// induces a perfect matching, and every two classes are joined by a perfect
/// matching with no other edges between them.
bool is_psi_partition(const Graph& g, const VertexLabeling& f, std::size_t part_size);

/// Decides membership in the equality family: g must be r-regular (r >= 1),
/// and an exact p_o-labeling with r classes must pass is_psi_partition. The
/// witnessing partition is returned on success. Order must fit the solvers.
std::optional<VertexLabeling> psi_membership(const Graph& g);

/// K_{k,k} on v_1..v_2k with odd-numbered vertices on one side: vertex 2i
/// (0-based) is adjacent to every odd vertex. Requires k >= 3.
Graph ng_extremal(std::size_t k);

/// The pairing {v_{2i-1}, v_{2i}} of ng_extremal(k) as a labeling.
VertexLabeling ng_pairing(std::size_t k);

/// cartesian(cycle(4m), complete(n)); requires m >= 1 and n >= 3.
Graph cart_sharp_instance(std::size_t m, std::size_t n);

/// The open packing {v_(4k-3)1, v_(4k-2)1 : 1 <= k <= m} of
/// cart_sharp_instance(m, n), with v_ij at index (i-1)*n + (j-1).
VertexSet cart_sharp_open_packing(std::size_t m, std::size_t n);

}  // namespace openpack
