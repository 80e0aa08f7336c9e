#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "openpack/families.hpp"
#include "openpack/graph.hpp"
#include "openpack/solvers.hpp"

namespace openpack {

// T1  n/rho_o <= p_o <= n - rho_o + 1
// T2  chi2/2 <= p_o <= chi2
// T3  Delta <= p_o
// T4  Cartesian product bounds
// T5  direct product bounds
// T6  lexicographic product formula (and the G o K2 gadget)
// T7  corona formula
// T8  degree-density lower bound and its equality family
// T9  p_o(G) + p_o(complement) >= n
// T10 trees: p_o = Delta, constructive labeling
// T11 even-cycle-free G: chi(N(G)) vs omega(N(G))
// T12 bipartite complement: chi(N(G)) = omega(N(G))
// T13 rho_o = 1 and p_o = n characterization (n >= 3)
// T14 rho <= gamma, rho_o <= gamma_t
// T15 N(C_{4t+2}) = 2 C_{2t+1}
enum class TheoremId { T1 = 1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11, T12, T13, T14, T15 };

enum class Verdict { holds, equality, violated, report_only, skipped };

std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);
std::string_view verdict_name(Verdict v);

/// One certificate backing a row: `kind` names the predicate that checks it
/// against the graph encoded in `graph6`, and `value` the invariant it
/// bounds.
struct WitnessEntry {
  std::string name;
  std::string kind;
  std::string graph6;
  std::int64_t value = 0;
  Certificate certificate;
};

struct TheoremCheckResult {
  TheoremId theorem = TheoremId::T1;
  std::string instance;
  std::string relation;
  Verdict verdict = Verdict::holds;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::string note;
  std::vector<WitnessEntry> witness;
};

using CheckRows = std::vector<TheoremCheckResult>;

/// Harness products stay at or below this many vertices.
inline constexpr std::size_t kHarnessProductCap = 24;

CheckRows check_T1_T2_T3(const Graph& g);
CheckRows check_T4_cartesian(const Graph& g, const Graph& h);
CheckRows check_T5_direct(const Graph& g, const Graph& h);
/// Also emits the G o K2 gadget row when h is K2.
CheckRows check_T6_lexicographic(const Graph& g, const Graph& h);
CheckRows check_T7_corona(const Graph& g, const Graph& h);
CheckRows check_T8_delta(const Graph& g);
CheckRows check_T9_nordhaus_gaddum(const Graph& g);
CheckRows check_T10_tree(const Graph& t);
/// Report-only unless `strict`; always asserted for trees.
CheckRows check_T11_chordal(const Graph& g, bool strict);
CheckRows check_T12_complement_bipartite(const Graph& g);
CheckRows check_T13_open_packing_one(const Graph& g);
CheckRows check_T14_packing_domination(const Graph& g);
CheckRows check_T15_two_step_cycle(std::size_t t);

/// Re-checks every witness certificate against its predicate and value.
bool verify_witness(const TheoremCheckResult& row);

/// One corpus element: a single graph, a pair of factors, or a parameter.
struct CorpusItem {
  std::vector<Graph> graphs;
  std::optional<std::size_t> parameter;
};

enum class CorpusKind { all_n, all_upto, lex_grid, pair_grid, family, graph6, random_graphs, random_trees, cycle_params };

/// Lazily generated corpus description.
///   all_n n            every labeled graph on exactly n vertices
///   all_upto n         every labeled graph on 1..n vertices
///   lex_grid a b       connected G (2 <= |G| <= a) x every H (|H| <= b)
///   pair_grid a b      every G (|G| <= a) x every H (|H| <= b)
///   family             one generated graph
///   graph6             explicit lines, "g6" or "g6 g6" for pairs
///   random_graphs      `count` graphs G(n, p), seeds derived from `seed`
///   random_trees       `count` trees for each order in [n, n_max]
///   cycle_params       parameters t for T15
struct CorpusSpec {
  CorpusKind kind = CorpusKind::all_n;
  std::size_t n = 0;
  std::size_t n_max = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  FamilySpec family;
  std::vector<std::string> lines;
  std::vector<std::size_t> parameters;
  /// "", "connected", "even-cycle-free", "tree", "bipartite-complement", "no-isolated".
  std::string filter;
};

struct VerifyRequest {
  std::vector<TheoremId> theorems;
  CorpusSpec corpus;
  bool strict = false;
  bool witness_all = false;
  unsigned jobs = 1;
};

/// Parses the JSON request understood by the C API and CLI.
VerifyRequest parse_verify_request(std::string_view json_text);

struct SummaryKey {
  TheoremId theorem;
  std::string relation;
  auto operator<=>(const SummaryKey&) const = default;
};

struct VerifySummary {
  std::map<SummaryKey, std::map<Verdict, std::uint64_t>> counts;
  std::uint64_t instances = 0;
  std::uint64_t rows = 0;
  std::uint64_t violated = 0;
};

/// Runs the selected checks over the corpus. Rows reach `sink` in corpus
/// order (then theorem order) regardless of `jobs`. Every violated row is
/// recomputed and its witness verified before emission.
VerifySummary run_corpus(const VerifyRequest& request, const std::function<void(const TheoremCheckResult&)>& sink);

std::string to_json_line(const TheoremCheckResult& row, bool include_witness);
std::string render_summary(const VerifySummary& summary);

}  // namespace openpack
