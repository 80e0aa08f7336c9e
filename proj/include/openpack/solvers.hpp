#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "openpack/graph.hpp"

namespace openpack {

/// Hard upper limit on the order accepted by the exact solvers.
inline constexpr std::size_t kSolverHardCap = 64;

/// Effective solver cap: kSolverHardCap, lowered by OPENPACK_MAX_N when that
/// variable holds a smaller positive integer. Larger values are ignored.
std::size_t solver_cap();

/// Minimum proper colouring with its certificate.
struct Coloring {
  std::uint32_t colors = 0;
  VertexLabeling labeling;
};

/// Optimal vertex set with its certificate; size == members.size().
struct CertifiedSet {
  std::size_t size = 0;
  VertexSet members;
};

// Kernels. Iterative-deepening DSATUR backtracking between a greedy clique
// lower bound and a greedy colouring upper bound; branch-and-bound maximum
// clique with a greedy colouring bound. Ties go to the lowest vertex index.
Coloring chromatic_number(const Graph& g);
CertifiedSet max_clique(const Graph& g);
CertifiedSet max_independent_set(const Graph& g);

CertifiedSet open_packing_number(const Graph& g);
CertifiedSet packing_number(const Graph& g);
CertifiedSet domination_number(const Graph& g);
/// Throws ErrorCode::undefined when g has an isolated vertex.
CertifiedSet total_domination_number(const Graph& g);
/// Chromatic number of the two-step graph; classes are open packings of g.
Coloring open_packing_partition_number(const Graph& g);
/// Chromatic number of the square; classes are packings of g.
Coloring two_distance_chromatic(const Graph& g);
/// Largest set of vertices pairwise sharing a neighbor in g.
CertifiedSet omega_of_two_step(const Graph& g);

// Predicates used to verify certificates.
bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_open_packing(const Graph& g, const VertexSet& s);
bool is_packing(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_total_dominating(const Graph& g, const VertexSet& s);
bool is_proper_coloring(const Graph& g, const VertexLabeling& f);
/// No vertex has two neighbors with equal labels. Computed both per vertex
/// and per class (every class an open packing); a disagreement between the
/// two is reported as an internal error.
bool is_opp(const Graph& g, const VertexLabeling& f);

/// Splits an open packing into two packings (second possibly empty). The
/// induced subgraph on s is a matching plus isolated vertices; the second
/// packing takes the higher endpoint of every matching edge.
std::pair<VertexSet, VertexSet> split_open_packing(const Graph& g, const VertexSet& s);

/// Applies split_open_packing to every class of an OPP labeling, giving a
/// 2-distance colouring with at most twice as many classes.
VertexLabeling split_opp_labeling(const Graph& g, const VertexLabeling& f);

enum class Invariant { p_o, chi2, chi, rho, rho_o, gamma, gamma_t, omega_N, Delta, delta, n, m };

std::string_view invariant_name(Invariant which);
std::optional<Invariant> invariant_from_name(std::string_view name);
std::span<const Invariant> all_invariants();

using Certificate = std::variant<VertexSet, VertexLabeling>;

struct InvariantReport {
  std::map<std::string, std::int64_t> values;
  std::map<std::string, Certificate> certificates;
  /// Names requested but undefined for this graph (gamma_t with isolated vertices).
  std::vector<std::string> undefined;
};

/// Computes the requested invariants with certificates. Every certificate is
/// re-verified against its predicate before returning.
InvariantReport compute_invariants(const Graph& g, std::span<const Invariant> which);
InvariantReport full_report(const Graph& g);

}  // namespace openpack
