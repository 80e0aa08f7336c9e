#include "openpack/solvers.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include "kernels.hpp"
#include "openpack/error.hpp"
#include "openpack/transforms.hpp"

namespace openpack {

std::size_t solver_cap() {
  const char* raw = std::getenv("OPENPACK_MAX_N");
  if (raw == nullptr) return kSolverHardCap;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return kSolverHardCap;
  return std::min(value, kSolverHardCap);
}

namespace {

Coloring to_coloring(const std::vector<int>& colour) {
  std::vector<std::uint32_t> raw(colour.begin(), colour.end());
  auto labeling = VertexLabeling::normalized(raw);
  const auto k = labeling.classes();
  return {k, std::move(labeling)};
}

CertifiedSet to_certified(std::size_t n, detail::Mask m) {
  auto members = detail::to_vertex_set(n, m);
  const auto size = members.size();
  return {size, std::move(members)};
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::internal, std::string("certificate check failed: ") + what);
}

}  // namespace

Coloring chromatic_number(const Graph& g) {
  auto result = to_coloring(detail::exact_coloring(detail::to_masks(g)));
  require(is_proper_coloring(g, result.labeling), "proper colouring");
  return result;
}

CertifiedSet max_clique(const Graph& g) {
  auto result = to_certified(g.order(), detail::exact_max_clique(detail::to_masks(g)));
  require(is_clique(g, result.members), "clique");
  return result;
}

CertifiedSet max_independent_set(const Graph& g) {
  const auto masks = detail::to_masks(g);
  auto result = to_certified(g.order(), detail::exact_max_clique(detail::complement_masks(masks)));
  require(is_independent(g, result.members), "independent set");
  return result;
}

CertifiedSet open_packing_number(const Graph& g) {
  detail::to_masks(g);
  auto result = max_independent_set(two_step(g));
  require(is_open_packing(g, result.members), "open packing");
  return result;
}

CertifiedSet packing_number(const Graph& g) {
  detail::to_masks(g);
  auto result = max_independent_set(closed_neighborhood_graph(g));
  require(is_packing(g, result.members), "packing");
  return result;
}

CertifiedSet domination_number(const Graph& g) {
  auto result = to_certified(g.order(), detail::exact_min_cover(detail::to_masks(g), false));
  require(is_dominating(g, result.members), "dominating set");
  return result;
}

CertifiedSet total_domination_number(const Graph& g) {
  const auto masks = detail::to_masks(g);
  if (isolated_vertex_count(g) > 0) {
    fail(ErrorCode::undefined, "total domination is undefined for graphs with isolated vertices");
  }
  auto result = to_certified(g.order(), detail::exact_min_cover(masks, true));
  require(is_total_dominating(g, result.members), "total dominating set");
  return result;
}

Coloring open_packing_partition_number(const Graph& g) {
  detail::to_masks(g);
  auto result = chromatic_number(two_step(g));
  require(is_opp(g, result.labeling), "open packing partition");
  return result;
}

Coloring two_distance_chromatic(const Graph& g) {
  detail::to_masks(g);
  auto result = chromatic_number(closed_neighborhood_graph(g));
  for (const auto& part : result.labeling.partition()) require(is_packing(g, part), "packing class");
  return result;
}

CertifiedSet omega_of_two_step(const Graph& g) {
  detail::to_masks(g);
  auto result = max_clique(two_step(g));
  // Pairwise common neighbors.
  const auto members = result.members.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      require(g.neighbors(members[i]).intersects(g.neighbors(members[j])), "two-step clique");
    }
  }
  return result;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && !g.neighbors(v).intersects(s); });
  return ok;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    VertexSet others = s;
    others.erase(v);
    ok = ok && others.is_subset_of(g.neighbors(v));
  });
  return ok;
}

bool is_open_packing(const Graph& g, const VertexSet& s) {
  // Equivalently, no vertex has two neighbors in s.
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((g.neighbors(v) & s).size() > 1) return false;
  }
  return true;
}

bool is_packing(const Graph& g, const VertexSet& s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((g.closed_neighbors(v) & s).size() > 1) return false;
  }
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.contains(v) && !g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

bool is_total_dominating(const Graph& g, const VertexSet& s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

namespace {

void check_labeling_fits(const Graph& g, const VertexLabeling& f) {
  if (f.order() != g.order()) {
    fail(ErrorCode::invalid_argument, "labeling covers " + std::to_string(f.order()) + " vertices, graph has " +
                                          std::to_string(g.order()));
  }
}

}  // namespace

bool is_proper_coloring(const Graph& g, const VertexLabeling& f) {
  check_labeling_fits(g, f);
  for (auto [u, v] : g.edges()) {
    if (f[u] == f[v]) return false;
  }
  return true;
}

bool is_opp(const Graph& g, const VertexLabeling& f) {
  check_labeling_fits(g, f);
  bool per_vertex = true;
  std::vector<bool> seen(f.classes() + 1);
  for (Vertex v = 0; v < g.order() && per_vertex; ++v) {
    std::fill(seen.begin(), seen.end(), false);
    g.neighbors(v).for_each([&](Vertex w) {
      if (seen[f[w]]) per_vertex = false;
      seen[f[w]] = true;
    });
  }
  bool per_class = true;
  // Pairwise disjoint neighborhoods <=> each one misses the union of the earlier ones.
  for (const auto& part : f.partition()) {
    VertexSet covered(g.order());
    part.for_each([&](Vertex v) {
      const auto nv = g.neighbors(v);
      if (covered.intersects(nv)) per_class = false;
      covered |= nv;
    });
    if (!per_class) break;
  }
  if (per_vertex != per_class) fail(ErrorCode::internal, "OPP characterizations disagree");
  return per_vertex;
}

std::pair<VertexSet, VertexSet> split_open_packing(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) fail(ErrorCode::invalid_argument, "vertex set does not belong to this graph");
  if (!is_open_packing(g, s)) fail(ErrorCode::invalid_argument, "set is not an open packing");
  VertexSet second(g.order());
  s.for_each([&](Vertex v) {
    const VertexSet partner = g.neighbors(v) & s;
    if (!partner.empty() && partner.first() < v) second.insert(v);
  });
  return {s - second, second};
}

VertexLabeling split_opp_labeling(const Graph& g, const VertexLabeling& f) {
  if (!is_opp(g, f)) fail(ErrorCode::invalid_argument, "labeling is not an OPP-function");
  std::vector<std::uint32_t> raw(g.order());
  std::uint32_t next = 0;
  for (const auto& part : f.partition()) {
    const auto [first, second] = split_open_packing(g, part);
    ++next;
    first.for_each([&](Vertex v) { raw[v] = next; });
    if (!second.empty()) {
      ++next;
      second.for_each([&](Vertex v) { raw[v] = next; });
    }
  }
  return VertexLabeling(std::move(raw));
}

namespace {

constexpr std::array<std::pair<Invariant, std::string_view>, 12> kNames{{
    {Invariant::p_o, "p_o"},
    {Invariant::chi2, "chi2"},
    {Invariant::chi, "chi"},
    {Invariant::rho, "rho"},
    {Invariant::rho_o, "rho_o"},
    {Invariant::gamma, "gamma"},
    {Invariant::gamma_t, "gamma_t"},
    {Invariant::omega_N, "omega_N"},
    {Invariant::Delta, "Delta"},
    {Invariant::delta, "delta"},
    {Invariant::n, "n"},
    {Invariant::m, "m"},
}};

constexpr std::array<Invariant, 12> kAll{Invariant::p_o,   Invariant::chi2,    Invariant::chi,     Invariant::rho,
                                         Invariant::rho_o, Invariant::gamma,   Invariant::gamma_t, Invariant::omega_N,
                                         Invariant::Delta, Invariant::delta,   Invariant::n,       Invariant::m};

}  // namespace

std::string_view invariant_name(Invariant which) {
  for (const auto& [key, name] : kNames) {
    if (key == which) return name;
  }
  return "?";
}

std::optional<Invariant> invariant_from_name(std::string_view name) {
  for (const auto& [key, label] : kNames) {
    if (label == name) return key;
  }
  return std::nullopt;
}

std::span<const Invariant> all_invariants() { return kAll; }

InvariantReport compute_invariants(const Graph& g, std::span<const Invariant> which) {
  detail::to_masks(g);
  InvariantReport report;
  auto put_set = [&](Invariant key, CertifiedSet result) {
    const std::string name(invariant_name(key));
    report.values[name] = static_cast<std::int64_t>(result.size);
    report.certificates.emplace(name, std::move(result.members));
  };
  auto put_coloring = [&](Invariant key, Coloring result) {
    const std::string name(invariant_name(key));
    report.values[name] = result.colors;
    report.certificates.emplace(name, std::move(result.labeling));
  };
  for (Invariant key : which) {
    switch (key) {
      case Invariant::p_o:
        put_coloring(key, open_packing_partition_number(g));
        break;
      case Invariant::chi2:
        put_coloring(key, two_distance_chromatic(g));
        break;
      case Invariant::chi:
        put_coloring(key, chromatic_number(g));
        break;
      case Invariant::rho:
        put_set(key, packing_number(g));
        break;
      case Invariant::rho_o:
        put_set(key, open_packing_number(g));
        break;
      case Invariant::gamma:
        put_set(key, domination_number(g));
        break;
      case Invariant::gamma_t:
        if (isolated_vertex_count(g) > 0) {
          report.undefined.emplace_back(invariant_name(key));
        } else {
          put_set(key, total_domination_number(g));
        }
        break;
      case Invariant::omega_N:
        put_set(key, omega_of_two_step(g));
        break;
      case Invariant::Delta:
        report.values["Delta"] = static_cast<std::int64_t>(max_degree(g));
        break;
      case Invariant::delta:
        report.values["delta"] = static_cast<std::int64_t>(min_degree(g));
        break;
      case Invariant::n:
        report.values["n"] = static_cast<std::int64_t>(g.order());
        break;
      case Invariant::m:
        report.values["m"] = static_cast<std::int64_t>(g.size());
        break;
    }
  }

  // Relations that follow directly from the definitions: every packing is an
  // open packing, and each neighborhood is a clique of the two-step graph.
  const auto& v = report.values;
  auto both = [&](const char* a, const char* b) { return v.contains(a) && v.contains(b); };
  if (both("p_o", "chi2")) require(v.at("p_o") <= v.at("chi2"), "p_o <= chi2");
  if (both("omega_N", "p_o")) require(v.at("omega_N") <= v.at("p_o"), "omega_N <= p_o");
  if (both("Delta", "omega_N")) require(v.at("Delta") <= v.at("omega_N"), "Delta <= omega_N");
  if (both("rho", "rho_o")) require(v.at("rho") <= v.at("rho_o"), "rho <= rho_o");
  return report;
}

InvariantReport full_report(const Graph& g) { return compute_invariants(g, all_invariants()); }

}  // namespace openpack
