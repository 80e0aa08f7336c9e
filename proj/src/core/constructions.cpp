#include "openpack/constructions.hpp"

#include <deque>
#include <string>

#include "openpack/error.hpp"
#include "openpack/generators.hpp"
#include "openpack/products.hpp"
#include "openpack/solvers.hpp"

namespace openpack {

VertexLabeling tree_opp(const Graph& t) {
  if (t.order() < 2) fail(ErrorCode::hypothesis, "tree_opp needs a tree on at least two vertices");
  if (!is_tree(t)) fail(ErrorCode::hypothesis, "tree_opp input is not a tree");

  const std::size_t n = t.order();
  const auto delta = static_cast<std::uint32_t>(max_degree(t));
  Vertex root = 0;
  while (t.degree(root) != delta) ++root;

  constexpr std::uint32_t kNone = 0;
  std::vector<std::uint32_t> label(n, kNone);
  std::vector<Vertex> parent(n, 0);
  std::vector<bool> visited(n, false);
  label[root] = 1;
  visited[root] = true;

  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    const std::uint32_t banned = v == root ? kNone : label[parent[v]];
    std::uint32_t next = 1;
    t.neighbors(v).for_each([&](Vertex c) {
      if (visited[c]) return;
      if (next == banned) ++next;
      label[c] = next++;
      parent[c] = v;
      visited[c] = true;
      queue.push_back(c);
    });
  }
  return VertexLabeling(std::move(label));
}

namespace {

void check_psi(PsiSpec spec) {
  if (spec.r < 2) fail(ErrorCode::invalid_argument, "psi: r must be at least 2");
  if (spec.s < 2 || spec.s % 2 != 0) fail(ErrorCode::invalid_argument, "psi: part size s must be even and >= 2");
  if (spec.r * spec.s > kMaxGraphOrder) fail(ErrorCode::cap_exceeded, "psi: graph too large");
}

}  // namespace

Graph psi_graph(PsiSpec spec) {
  check_psi(spec);
  const auto [r, s] = spec;
  std::vector<Edge> edges;
  auto at = [s = s](std::size_t part, std::size_t k) { return static_cast<Vertex>(part * s + k); };
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (std::size_t k = 0; k < s; ++k) edges.emplace_back(at(i, k), at(j, k));
    }
    for (std::size_t k = 0; k < s; k += 2) edges.emplace_back(at(i, k), at(i, k + 1));
  }
  return Graph::from_edge_list(r * s, edges);
}

VertexLabeling psi_parts(PsiSpec spec) {
  check_psi(spec);
  std::vector<std::uint32_t> labels(spec.r * spec.s);
  for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = static_cast<std::uint32_t>(v / spec.s + 1);
  return VertexLabeling(std::move(labels));
}

bool is_psi_partition(const Graph& g, const VertexLabeling& f, std::size_t part_size) {
  if (f.order() != g.order()) return false;
  const auto parts = f.partition();
  for (const auto& part : parts) {
    if (part.size() != part_size) return false;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      // Own class: the internal matching partner; other classes: the cross partner.
      if ((g.neighbors(v) & parts[j]).size() != 1) return false;
    }
  }
  return true;
}

std::optional<VertexLabeling> psi_membership(const Graph& g) {
  if (!is_regular(g)) return std::nullopt;
  const std::size_t r = max_degree(g);
  if (r == 0 || g.order() % (2 * r) != 0) return std::nullopt;
  auto coloring = open_packing_partition_number(g);
  if (coloring.colors != r) return std::nullopt;
  if (!is_psi_partition(g, coloring.labeling, g.order() / r)) return std::nullopt;
  return std::move(coloring.labeling);
}

Graph ng_extremal(std::size_t k) {
  if (k < 3) fail(ErrorCode::invalid_argument, "ng_extremal needs k >= 3, got " + std::to_string(k));
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 2 * k; a += 2) {
    for (Vertex b = 1; b < 2 * k; b += 2) edges.emplace_back(a, b);
  }
  return Graph::from_edge_list(2 * k, edges);
}

VertexLabeling ng_pairing(std::size_t k) {
  if (k < 3) fail(ErrorCode::invalid_argument, "ng_pairing needs k >= 3");
  std::vector<std::uint32_t> labels(2 * k);
  for (std::size_t v = 0; v < 2 * k; ++v) labels[v] = static_cast<std::uint32_t>(v / 2 + 1);
  return VertexLabeling(std::move(labels));
}

Graph cart_sharp_instance(std::size_t m, std::size_t n) {
  if (m < 1 || n < 3) fail(ErrorCode::invalid_argument, "cart-sharp needs m >= 1 and n >= 3");
  if (4 * m * n > kMaxGraphOrder) fail(ErrorCode::cap_exceeded, "cart-sharp instance too large");
  return cartesian(cycle(4 * m), complete(n)).graph;
}

VertexSet cart_sharp_open_packing(std::size_t m, std::size_t n) {
  if (m < 1 || n < 3) fail(ErrorCode::invalid_argument, "cart-sharp needs m >= 1 and n >= 3");
  const ProductVertexMap layout(4 * m, n);
  VertexSet b(layout.size());
  for (std::size_t k = 1; k <= m; ++k) {
    b.insert(layout.index(static_cast<Vertex>(4 * k - 4), 0));
    b.insert(layout.index(static_cast<Vertex>(4 * k - 3), 0));
  }
  return b;
}

}  // namespace openpack
