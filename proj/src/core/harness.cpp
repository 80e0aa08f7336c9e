#include "openpack/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "openpack/constructions.hpp"
#include "openpack/error.hpp"
#include "openpack/generators.hpp"
#include "openpack/io.hpp"
#include "openpack/isomorphism.hpp"
#include "openpack/products.hpp"
#include "openpack/transforms.hpp"

namespace openpack {

using json = nlohmann::ordered_json;

std::string theorem_name(TheoremId id) { return "T" + std::to_string(static_cast<int>(id)); }

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  if (name.size() < 2 || (name[0] != 'T' && name[0] != 't')) return std::nullopt;
  int value = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
    if (value > 15) return std::nullopt;
  }
  if (value < 1) return std::nullopt;
  return static_cast<TheoremId>(value);
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::equality:
      return "equality";
    case Verdict::violated:
      return "violated";
    case Verdict::report_only:
      return "report_only";
    case Verdict::skipped:
      return "skipped";
  }
  return "?";
}

namespace {

using I = std::int64_t;

I as_int(std::size_t v) { return static_cast<I>(v); }

Verdict at_most(I lhs, I rhs) {
  if (lhs < rhs) return Verdict::holds;
  return lhs == rhs ? Verdict::equality : Verdict::violated;
}

Verdict exactly(I lhs, I rhs) { return lhs == rhs ? Verdict::equality : Verdict::violated; }

Verdict iff(bool a, bool b) { return a == b ? Verdict::holds : Verdict::violated; }

TheoremCheckResult make_row(TheoremId id, const std::string& instance, std::string relation, Verdict verdict, I lhs,
                            I rhs, std::vector<WitnessEntry> witness = {}) {
  TheoremCheckResult row;
  row.theorem = id;
  row.instance = instance;
  row.relation = std::move(relation);
  row.verdict = verdict;
  row.lhs = lhs;
  row.rhs = rhs;
  row.witness = std::move(witness);
  return row;
}

TheoremCheckResult skipped(TheoremId id, const std::string& instance, std::string relation, std::string why) {
  auto row = make_row(id, instance, std::move(relation), Verdict::skipped, 0, 0);
  row.note = std::move(why);
  return row;
}

WitnessEntry labeling_entry(std::string name, std::string kind, const Graph& g, const Coloring& c) {
  return {std::move(name), std::move(kind), to_graph6(g), c.colors, c.labeling};
}

WitnessEntry set_entry(std::string name, std::string kind, const Graph& g, const CertifiedSet& s) {
  return {std::move(name), std::move(kind), to_graph6(g), as_int(s.size), s.members};
}

std::string pair_instance(const Graph& g, const Graph& h) { return to_graph6(g) + " " + to_graph6(h); }

bool is_nonempty(const Graph& g) { return g.size() > 0; }

}  // namespace

CheckRows check_T1_T2_T3(const Graph& g) {
  const auto instance = to_graph6(g);
  const auto po = open_packing_partition_number(g);
  const auto ro = open_packing_number(g);
  const auto c2 = two_distance_chromatic(g);
  const I n = as_int(g.order());
  const I p = po.colors;
  const I r = as_int(ro.size);
  const I x2 = c2.colors;
  const auto w_po = labeling_entry("p_o(G)", "opp_labeling", g, po);
  const auto w_ro = set_entry("rho_o(G)", "open_packing", g, ro);
  const auto w_c2 = labeling_entry("chi2(G)", "two_distance_coloring", g, c2);

  CheckRows rows;
  rows.push_back(make_row(TheoremId::T1, instance, "n <= p_o * rho_o", at_most(n, p * r), n, p * r, {w_po, w_ro}));
  rows.push_back(make_row(TheoremId::T1, instance, "p_o <= n - rho_o + 1", at_most(p, n - r + 1), p, n - r + 1,
                          {w_po, w_ro}));
  rows.push_back(make_row(TheoremId::T2, instance, "chi2 <= 2 * p_o", at_most(x2, 2 * p), x2, 2 * p, {w_po, w_c2}));
  rows.push_back(make_row(TheoremId::T2, instance, "p_o <= chi2", at_most(p, x2), p, x2, {w_po, w_c2}));
  const I delta = as_int(max_degree(g));
  rows.push_back(make_row(TheoremId::T3, instance, "Delta <= p_o", at_most(delta, p), delta, p, {w_po}));
  return rows;
}

CheckRows check_T4_cartesian(const Graph& g, const Graph& h) {
  const auto instance = pair_instance(g, h);
  const char* upper = "p_o(G box H) <= min(p_o(G) chi2(H), chi2(G) p_o(H))";
  const char* lower = "max(p_o(G), p_o(H)) <= p_o(G box H)";
  if (g.order() * h.order() > kHarnessProductCap) {
    return {skipped(TheoremId::T4, instance, upper, "product exceeds harness cap"),
            skipped(TheoremId::T4, instance, lower, "product exceeds harness cap")};
  }
  const auto product = cartesian(g, h).graph;
  const auto pp = open_packing_partition_number(product);
  const auto pg = open_packing_partition_number(g);
  const auto ph = open_packing_partition_number(h);
  const auto cg = two_distance_chromatic(g);
  const auto ch = two_distance_chromatic(h);
  const I bound = std::min<I>(I{pg.colors} * ch.colors, I{cg.colors} * ph.colors);
  const I floor_value = std::max<I>(pg.colors, ph.colors);
  const auto w_p = labeling_entry("p_o(G box H)", "opp_labeling", product, pp);
  CheckRows rows;
  rows.push_back(make_row(TheoremId::T4, instance, upper, at_most(pp.colors, bound), pp.colors, bound,
                          {w_p, labeling_entry("p_o(G)", "opp_labeling", g, pg),
                           labeling_entry("p_o(H)", "opp_labeling", h, ph),
                           labeling_entry("chi2(G)", "two_distance_coloring", g, cg),
                           labeling_entry("chi2(H)", "two_distance_coloring", h, ch)}));
  rows.push_back(make_row(TheoremId::T4, instance, lower, at_most(floor_value, pp.colors), floor_value, pp.colors,
                          {w_p, labeling_entry("p_o(G)", "opp_labeling", g, pg),
                           labeling_entry("p_o(H)", "opp_labeling", h, ph)}));
  return rows;
}

CheckRows check_T5_direct(const Graph& g, const Graph& h) {
  const auto instance = pair_instance(g, h);
  const char* lower = "max(p_o(G), p_o(H)) <= p_o(G x H)";
  const char* upper = "p_o(G x H) <= p_o(G) p_o(H)";
  if (!is_nonempty(g) || !is_nonempty(h)) {
    return {skipped(TheoremId::T5, instance, lower, "a factor has no edges"),
            skipped(TheoremId::T5, instance, upper, "a factor has no edges")};
  }
  if (g.order() * h.order() > kHarnessProductCap) {
    return {skipped(TheoremId::T5, instance, lower, "product exceeds harness cap"),
            skipped(TheoremId::T5, instance, upper, "product exceeds harness cap")};
  }
  const auto product = direct(g, h).graph;
  const auto pp = open_packing_partition_number(product);
  const auto pg = open_packing_partition_number(g);
  const auto ph = open_packing_partition_number(h);
  const I floor_value = std::max<I>(pg.colors, ph.colors);
  const I bound = I{pg.colors} * ph.colors;
  std::vector<WitnessEntry> w{labeling_entry("p_o(G x H)", "opp_labeling", product, pp),
                              labeling_entry("p_o(G)", "opp_labeling", g, pg),
                              labeling_entry("p_o(H)", "opp_labeling", h, ph)};
  CheckRows rows;
  rows.push_back(make_row(TheoremId::T5, instance, lower, at_most(floor_value, pp.colors), floor_value, pp.colors, w));
  rows.push_back(make_row(TheoremId::T5, instance, upper, at_most(pp.colors, bound), pp.colors, bound, w));
  return rows;
}

CheckRows check_T6_lexicographic(const Graph& g, const Graph& h) {
  const auto instance = pair_instance(g, h);
  const char* relation = "p_o(G o H) = chi2(G)|V(H)| - i_H (chi2(G) - p_o(G))";
  const bool gadget = h.order() == 2 && h.size() == 1;
  const char* gadget_relation = "p_o(G o K2) = 2 chi2(G)";
  auto skip_all = [&](const std::string& why) {
    CheckRows rows{skipped(TheoremId::T6, instance, relation, why)};
    if (gadget) rows.push_back(skipped(TheoremId::T6, instance, gadget_relation, why));
    return rows;
  };
  if (g.order() < 2 || !is_connected(g)) return skip_all("G must be connected of order at least 2");
  if (g.order() * h.order() > kHarnessProductCap) return skip_all("product exceeds harness cap");

  const auto product = lexicographic(g, h).graph;
  const auto pp = open_packing_partition_number(product);
  const auto pg = open_packing_partition_number(g);
  const auto cg = two_distance_chromatic(g);
  const I iso = as_int(isolated_vertex_count(h));
  const I formula = I{cg.colors} * as_int(h.order()) - iso * (I{cg.colors} - I{pg.colors});
  std::vector<WitnessEntry> w{labeling_entry("p_o(G o H)", "opp_labeling", product, pp),
                              labeling_entry("p_o(G)", "opp_labeling", g, pg),
                              labeling_entry("chi2(G)", "two_distance_coloring", g, cg)};
  CheckRows rows{make_row(TheoremId::T6, instance, relation, exactly(pp.colors, formula), pp.colors, formula, w)};
  if (gadget) {
    rows.push_back(make_row(TheoremId::T6, instance, gadget_relation, exactly(pp.colors, 2 * I{cg.colors}), pp.colors,
                            2 * I{cg.colors}, w));
  }
  return rows;
}

CheckRows check_T7_corona(const Graph& g, const Graph& h) {
  const auto instance = pair_instance(g, h);
  const char* relation = "p_o(G corona H) = max(p_o(G), |V(H)| + Delta(G))";
  if (g.order() * (1 + h.order()) > kHarnessProductCap) {
    return {skipped(TheoremId::T7, instance, relation, "corona exceeds harness cap")};
  }
  const auto product = corona(g, h).graph;
  const auto pp = open_packing_partition_number(product);
  const auto pg = open_packing_partition_number(g);
  const I formula = std::max<I>(pg.colors, as_int(h.order() + max_degree(g)));
  return {make_row(TheoremId::T7, instance, relation, exactly(pp.colors, formula), pp.colors, formula,
                   {labeling_entry("p_o(G corona H)", "opp_labeling", product, pp),
                    labeling_entry("p_o(G)", "opp_labeling", g, pg)})};
}

CheckRows check_T8_delta(const Graph& g) {
  const auto instance = to_graph6(g);
  const char* bound_relation = "2m - n <= p_o (p_o - 1) rho_o";
  const char* family_relation = "bound tight <=> G in Psi";
  if (g.order() < 2 || !is_connected(g)) {
    const char* why = "G must be connected of order at least 2";
    return {skipped(TheoremId::T8, instance, bound_relation, why), skipped(TheoremId::T8, instance, family_relation, why)};
  }
  const auto po = open_packing_partition_number(g);
  const auto ro = open_packing_number(g);
  const I p = po.colors;
  const I lhs = 2 * as_int(g.size()) - as_int(g.order());
  const I rhs = p * (p - 1) * as_int(ro.size);
  std::vector<WitnessEntry> w{labeling_entry("p_o(G)", "opp_labeling", g, po),
                              set_entry("rho_o(G)", "open_packing", g, ro)};
  CheckRows rows{make_row(TheoremId::T8, instance, bound_relation, at_most(lhs, rhs), lhs, rhs, w)};

  const bool tight = lhs == rhs;
  const auto member = psi_membership(g);
  auto family_witness = w;
  if (member) {
    family_witness.push_back({"Psi partition", "psi_partition", instance, member->classes(), *member});
  }
  rows.push_back(make_row(TheoremId::T8, instance, family_relation, iff(tight, member.has_value()), tight ? 1 : 0,
                          member ? 1 : 0, std::move(family_witness)));
  return rows;
}

CheckRows check_T9_nordhaus_gaddum(const Graph& g) {
  const auto instance = to_graph6(g);
  const auto co = complement(g);
  const auto pg = open_packing_partition_number(g);
  const auto pc = open_packing_partition_number(co);
  const I n = as_int(g.order());
  const I sum = I{pg.colors} + pc.colors;
  std::vector<WitnessEntry> w{labeling_entry("p_o(G)", "opp_labeling", g, pg),
                              labeling_entry("p_o(complement G)", "opp_labeling", co, pc)};
  if (g.order() == 4) {
    const bool c4 = is_isomorphic(g, cycle(4));
    const bool two_p2 = !c4 && is_isomorphic(g, disjoint_union(path(2), path(2)));
    if (c4 || two_p2) {
      auto row = make_row(TheoremId::T9, instance, "n - 1 <= p_o(G) + p_o(complement G) [excluded graph]",
                          Verdict::report_only, n - 1, sum, w);
      row.note = c4 ? "excluded: isomorphic to C4" : "excluded: isomorphic to 2P2";
      return {row};
    }
  }
  return {make_row(TheoremId::T9, instance, "n <= p_o(G) + p_o(complement G)", at_most(n, sum), n, sum, w)};
}

CheckRows check_T10_tree(const Graph& t) {
  const auto instance = to_graph6(t);
  const char* labeling_relation = "classes(tree_opp) = Delta, valid OPP";
  const char* exact_relation = "p_o = Delta";
  if (t.order() < 2 || !is_tree(t)) {
    const char* why = "not a tree on at least two vertices";
    return {skipped(TheoremId::T10, instance, labeling_relation, why),
            skipped(TheoremId::T10, instance, exact_relation, why)};
  }
  const I delta = as_int(max_degree(t));
  const auto labeling = tree_opp(t);
  const bool valid = is_opp(t, labeling);
  auto labeling_row = make_row(TheoremId::T10, instance, labeling_relation,
                               valid && labeling.classes() == delta ? Verdict::equality : Verdict::violated,
                               labeling.classes(), delta,
                               {{"tree_opp(T)", "tree_opp_output", instance, labeling.classes(), labeling}});
  if (!valid) labeling_row.note = "labeling is not an OPP-function";
  CheckRows rows{std::move(labeling_row)};
  if (t.order() > solver_cap()) {
    rows.push_back(skipped(TheoremId::T10, instance, exact_relation, "tree exceeds solver cap"));
  } else {
    const auto po = open_packing_partition_number(t);
    rows.push_back(make_row(TheoremId::T10, instance, exact_relation, exactly(po.colors, delta), po.colors, delta,
                            {labeling_entry("p_o(T)", "opp_labeling", t, po)}));
  }
  return rows;
}

namespace {

TheoremCheckResult chi_vs_omega_row(TheoremId id, const Graph& g, bool assert_equality) {
  const auto instance = to_graph6(g);
  const auto n = two_step(g);
  const auto chi = chromatic_number(n);
  const auto omega = max_clique(n);
  const Verdict verdict = assert_equality ? exactly(chi.colors, as_int(omega.size)) : Verdict::report_only;
  auto row = make_row(id, instance, "chi(N(G)) = omega(N(G))", verdict, chi.colors, as_int(omega.size),
                      {labeling_entry("chi(N(G))", "proper_coloring", n, chi),
                       set_entry("omega(N(G))", "clique", n, omega)});
  row.note = std::string("N(G) chordal: ") + (is_chordal(n) ? "yes" : "no");
  return row;
}

}  // namespace

CheckRows check_T11_chordal(const Graph& g, bool strict) {
  if (has_even_cycle(g)) {
    return {skipped(TheoremId::T11, to_graph6(g), "chi(N(G)) = omega(N(G))", "G contains an even cycle")};
  }
  return {chi_vs_omega_row(TheoremId::T11, g, strict || is_tree(g))};
}

CheckRows check_T12_complement_bipartite(const Graph& g) {
  if (!is_bipartite(complement(g))) {
    return {skipped(TheoremId::T12, to_graph6(g), "chi(N(G)) = omega(N(G))", "complement is not bipartite")};
  }
  return {chi_vs_omega_row(TheoremId::T12, g, true)};
}

CheckRows check_T13_open_packing_one(const Graph& g) {
  const auto instance = to_graph6(g);
  const char* rho_relation = "rho_o = 1 <=> diam <= 2 and every edge on a triangle";
  const char* po_relation = "p_o = n <=> diam <= 2 and every edge on a triangle";
  if (g.order() < 3) {
    return {skipped(TheoremId::T13, instance, rho_relation, "needs n >= 3"),
            skipped(TheoremId::T13, instance, po_relation, "needs n >= 3")};
  }
  const auto diam = diameter_if_connected(g);
  const bool condition = diam && *diam <= 2 && every_edge_on_triangle(g);
  const auto ro = open_packing_number(g);
  const auto po = open_packing_partition_number(g);
  const bool rho_one = ro.size == 1;
  const bool po_full = po.colors == g.order();
  CheckRows rows;
  rows.push_back(make_row(TheoremId::T13, instance, rho_relation, iff(rho_one, condition), rho_one ? 1 : 0,
                          condition ? 1 : 0, {set_entry("rho_o(G)", "open_packing", g, ro)}));
  rows.push_back(make_row(TheoremId::T13, instance, po_relation, iff(po_full, condition), po_full ? 1 : 0,
                          condition ? 1 : 0, {labeling_entry("p_o(G)", "opp_labeling", g, po)}));
  return rows;
}

CheckRows check_T14_packing_domination(const Graph& g) {
  const auto instance = to_graph6(g);
  const auto rho = packing_number(g);
  const auto gamma = domination_number(g);
  CheckRows rows;
  rows.push_back(make_row(TheoremId::T14, instance, "rho <= gamma", at_most(as_int(rho.size), as_int(gamma.size)),
                          as_int(rho.size), as_int(gamma.size),
                          {set_entry("rho(G)", "packing", g, rho), set_entry("gamma(G)", "dominating", g, gamma)}));
  const char* open_relation = "rho_o <= gamma_t";
  if (isolated_vertex_count(g) > 0) {
    rows.push_back(skipped(TheoremId::T14, instance, open_relation, "G has an isolated vertex"));
  } else {
    const auto ro = open_packing_number(g);
    const auto gt = total_domination_number(g);
    rows.push_back(make_row(TheoremId::T14, instance, open_relation, at_most(as_int(ro.size), as_int(gt.size)),
                            as_int(ro.size), as_int(gt.size),
                            {set_entry("rho_o(G)", "open_packing", g, ro),
                             set_entry("gamma_t(G)", "total_dominating", g, gt)}));
  }
  return rows;
}

CheckRows check_T15_two_step_cycle(std::size_t t) {
  if (t < 1) fail(ErrorCode::invalid_argument, "T15 parameter t must be at least 1");
  const std::size_t order = 4 * t + 2;
  const auto c = cycle(order);
  const auto instance = to_graph6(c);
  const std::string label = "t=" + std::to_string(t);
  const char* iso_relation = "N(C_{4t+2}) isomorphic to 2 C_{2t+1}";
  const char* chi_relation = "chi(N(C_{4t+2})) = 3";
  const char* gap_relation = "chi(N(C_{4t+2})) = 3 != 2 = omega(N(C_{4t+2}))";
  if (order > kMaxIsomorphismOrder) {
    const std::string why = label + ": cycle exceeds the isomorphism cap";
    return {skipped(TheoremId::T15, instance, iso_relation, why), skipped(TheoremId::T15, instance, chi_relation, why),
            skipped(TheoremId::T15, instance, gap_relation, why)};
  }
  const auto n = two_step(c);
  const auto target = disjoint_union(cycle(2 * t + 1), cycle(2 * t + 1));
  const bool iso = is_isomorphic(n, target);
  const auto chi = chromatic_number(n);
  const auto omega = max_clique(n);
  std::vector<WitnessEntry> w{labeling_entry("chi(N(C))", "proper_coloring", n, chi),
                              set_entry("omega(N(C))", "clique", n, omega)};
  CheckRows rows;
  rows.push_back(make_row(TheoremId::T15, instance, iso_relation, exactly(iso ? 1 : 0, 1), iso ? 1 : 0, 1));
  rows.push_back(make_row(TheoremId::T15, instance, chi_relation, exactly(chi.colors, 3), chi.colors, 3, w));
  if (t >= 2) {
    const bool gap = chi.colors == 3 && omega.size == 2;
    rows.push_back(make_row(TheoremId::T15, instance, gap_relation, gap ? Verdict::holds : Verdict::violated,
                            chi.colors, as_int(omega.size), w));
  } else {
    auto row = skipped(TheoremId::T15, instance, gap_relation,
                       label + ": separation needs t >= 2; omega(N(C_6)) = " + std::to_string(omega.size));
    row.lhs = chi.colors;
    row.rhs = as_int(omega.size);
    row.witness = w;
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (row.note.empty()) row.note = label;
  }
  return rows;
}

bool verify_witness(const TheoremCheckResult& row) {
  for (const auto& entry : row.witness) {
    const auto g = parse_graph6(entry.graph6);
    const auto* labeling = std::get_if<VertexLabeling>(&entry.certificate);
    const auto* set = std::get_if<VertexSet>(&entry.certificate);
    bool ok = false;
    if (labeling != nullptr && labeling->order() == g.order()) {
      const I classes = labeling->classes();
      if (entry.kind == "opp_labeling") {
        ok = is_opp(g, *labeling) && classes == entry.value;
      } else if (entry.kind == "two_distance_coloring") {
        ok = is_proper_coloring(square(g), *labeling) && classes == entry.value;
      } else if (entry.kind == "proper_coloring") {
        ok = is_proper_coloring(g, *labeling) && classes == entry.value;
      } else if (entry.kind == "psi_partition") {
        ok = classes == entry.value && is_psi_partition(g, *labeling, g.order() / labeling->classes());
      } else if (entry.kind == "tree_opp_output") {
        ok = tree_opp(g) == *labeling && classes == entry.value;
      }
    } else if (set != nullptr && set->universe() == g.order()) {
      const bool size_ok = as_int(set->size()) == entry.value;
      if (entry.kind == "open_packing") {
        ok = size_ok && is_open_packing(g, *set);
      } else if (entry.kind == "packing") {
        ok = size_ok && is_packing(g, *set);
      } else if (entry.kind == "dominating") {
        ok = size_ok && is_dominating(g, *set);
      } else if (entry.kind == "total_dominating") {
        ok = size_ok && is_total_dominating(g, *set);
      } else if (entry.kind == "clique") {
        ok = size_ok && is_clique(g, *set);
      }
    }
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Corpora

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Graph> all_graphs_upto(std::size_t lo, std::size_t hi, bool connected_only) {
  std::vector<Graph> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    GraphEnumerator e(n);
    for (std::uint64_t k = 0; k < e.count(); ++k) {
      auto g = e.at(k);
      if (!connected_only || is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Graph> split_graph6_line(const std::string& line) {
  std::istringstream in(line);
  std::vector<Graph> graphs;
  std::string token;
  while (in >> token) graphs.push_back(parse_graph6(token));
  return graphs;
}

class Corpus {
 public:
  explicit Corpus(const CorpusSpec& spec) : spec_(spec) {
    switch (spec.kind) {
      case CorpusKind::all_n:
        enumerators_.emplace_back(spec.n);
        count_ = enumerators_.back().count();
        break;
      case CorpusKind::all_upto:
        for (std::size_t n = 1; n <= spec.n; ++n) {
          enumerators_.emplace_back(n);
          offsets_.push_back(count_);
          count_ += enumerators_.back().count();
        }
        break;
      case CorpusKind::lex_grid:
      case CorpusKind::pair_grid:
        if (spec.n > 6 || spec.n_max > 6) fail(ErrorCode::cap_exceeded, "grid factors are limited to 6 vertices");
        if (spec.n < 1 || spec.n_max < 1) fail(ErrorCode::invalid_argument, "grid sizes must be positive");
        left_ = spec.kind == CorpusKind::lex_grid ? all_graphs_upto(2, spec.n, true) : all_graphs_upto(1, spec.n, false);
        right_ = all_graphs_upto(1, spec.n_max, false);
        count_ = left_.size() * right_.size();
        break;
      case CorpusKind::family:
        count_ = 1;
        break;
      case CorpusKind::graph6:
        count_ = spec.lines.size();
        break;
      case CorpusKind::random_graphs:
        count_ = spec.count;
        break;
      case CorpusKind::random_trees:
        if (spec.n_max < spec.n) fail(ErrorCode::invalid_argument, "random trees: n_max must be >= n");
        count_ = (spec.n_max - spec.n + 1) * spec.count;
        break;
      case CorpusKind::cycle_params:
        count_ = spec.parameters.size();
        break;
    }
  }

  std::uint64_t size() const { return count_; }

  CorpusItem at(std::uint64_t i) const {
    CorpusItem item;
    switch (spec_.kind) {
      case CorpusKind::all_n:
        item.graphs.push_back(enumerators_[0].at(i));
        break;
      case CorpusKind::all_upto: {
        std::size_t k = offsets_.size() - 1;
        while (offsets_[k] > i) --k;
        item.graphs.push_back(enumerators_[k].at(i - offsets_[k]));
        break;
      }
      case CorpusKind::lex_grid:
      case CorpusKind::pair_grid:
        item.graphs.push_back(left_[i / right_.size()]);
        item.graphs.push_back(right_[i % right_.size()]);
        break;
      case CorpusKind::family:
        item.graphs.push_back(make_family(spec_.family));
        break;
      case CorpusKind::graph6:
        item.graphs = split_graph6_line(spec_.lines[i]);
        if (item.graphs.empty() || item.graphs.size() > 2) {
          fail(ErrorCode::parse_error, "corpus line " + std::to_string(i + 1) + " must hold one or two graph6 records");
        }
        break;
      case CorpusKind::random_graphs:
        item.graphs.push_back(random_graph(spec_.n, spec_.p, splitmix(spec_.seed ^ splitmix(i))));
        break;
      case CorpusKind::random_trees: {
        const std::size_t order = spec_.n + i / spec_.count;
        const std::uint64_t k = i % spec_.count;
        item.graphs.push_back(random_tree(order, splitmix(spec_.seed ^ splitmix(order * 0x100000001ULL + k))));
        break;
      }
      case CorpusKind::cycle_params:
        item.parameter = spec_.parameters[i];
        break;
    }
    return item;
  }

 private:
  const CorpusSpec& spec_;
  std::uint64_t count_ = 0;
  std::vector<GraphEnumerator> enumerators_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Graph> left_;
  std::vector<Graph> right_;
};

bool passes_filter(const std::string& filter, const CorpusItem& item) {
  if (filter.empty() || item.graphs.empty()) return true;
  const Graph& g = item.graphs[0];
  if (filter == "connected") return is_connected(g);
  if (filter == "even-cycle-free") return !has_even_cycle(g);
  if (filter == "tree") return is_tree(g);
  if (filter == "bipartite-complement") return is_bipartite(complement(g));
  if (filter == "no-isolated") return isolated_vertex_count(g) == 0;
  fail(ErrorCode::invalid_argument, "unknown filter \"" + filter + "\"");
}

int arity(TheoremId id) {
  switch (id) {
    case TheoremId::T4:
    case TheoremId::T5:
    case TheoremId::T6:
    case TheoremId::T7:
      return 2;
    case TheoremId::T15:
      return 0;
    default:
      return 1;
  }
}

CheckRows run_theorem(TheoremId id, const CorpusItem& item, bool strict) {
  const int needed = arity(id);
  const int have = item.parameter ? 0 : static_cast<int>(item.graphs.size());
  if (needed != have) {
    static const char* kinds[] = {"a cycle-parameter corpus", "a single-graph corpus", "a pair corpus"};
    fail(ErrorCode::invalid_argument, theorem_name(id) + " needs " + kinds[needed]);
  }
  switch (id) {
    case TheoremId::T1:
    case TheoremId::T2:
    case TheoremId::T3: {
      CheckRows rows;
      for (auto& row : check_T1_T2_T3(item.graphs[0])) {
        if (row.theorem == id) rows.push_back(std::move(row));
      }
      return rows;
    }
    case TheoremId::T4:
      return check_T4_cartesian(item.graphs[0], item.graphs[1]);
    case TheoremId::T5:
      return check_T5_direct(item.graphs[0], item.graphs[1]);
    case TheoremId::T6:
      return check_T6_lexicographic(item.graphs[0], item.graphs[1]);
    case TheoremId::T7:
      return check_T7_corona(item.graphs[0], item.graphs[1]);
    case TheoremId::T8:
      return check_T8_delta(item.graphs[0]);
    case TheoremId::T9:
      return check_T9_nordhaus_gaddum(item.graphs[0]);
    case TheoremId::T10:
      return check_T10_tree(item.graphs[0]);
    case TheoremId::T11:
      return check_T11_chordal(item.graphs[0], strict);
    case TheoremId::T12:
      return check_T12_complement_bipartite(item.graphs[0]);
    case TheoremId::T13:
      return check_T13_open_packing_one(item.graphs[0]);
    case TheoremId::T14:
      return check_T14_packing_domination(item.graphs[0]);
    case TheoremId::T15:
      return check_T15_two_step_cycle(*item.parameter);
  }
  return {};
}

std::optional<CheckRows> process(const Corpus& corpus, const VerifyRequest& request, std::uint64_t index) {
  const auto item = corpus.at(index);
  if (!passes_filter(request.corpus.filter, item)) return std::nullopt;
  CheckRows rows;
  for (TheoremId id : request.theorems) {
    auto part = run_theorem(id, item, request.strict);
    if (std::any_of(part.begin(), part.end(), [](const auto& r) { return r.verdict == Verdict::violated; })) {
      // A violation must reproduce and carry valid certificates.
      const auto again = run_theorem(id, item, request.strict);
      bool same = again.size() == part.size();
      for (std::size_t k = 0; same && k < part.size(); ++k) {
        same = again[k].verdict == part[k].verdict && again[k].lhs == part[k].lhs && again[k].rhs == part[k].rhs;
      }
      if (!same) fail(ErrorCode::internal, "violation did not reproduce on recomputation");
      for (const auto& r : part) {
        if (r.verdict == Verdict::violated && (r.witness.empty() || !verify_witness(r))) {
          fail(ErrorCode::internal, "witness for a violated row failed verification");
        }
      }
    }
    for (auto& r : part) rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

VerifySummary run_corpus(const VerifyRequest& request, const std::function<void(const TheoremCheckResult&)>& sink) {
  if (request.theorems.empty()) fail(ErrorCode::invalid_argument, "no theorem selected");
  const Corpus corpus(request.corpus);
  const unsigned jobs = std::max(1U, request.jobs);
  const std::uint64_t chunk = 64ULL * jobs;

  VerifySummary summary;
  for (std::uint64_t begin = 0; begin < corpus.size(); begin += chunk) {
    const std::uint64_t end = std::min(corpus.size(), begin + chunk);
    std::vector<std::optional<CheckRows>> results(end - begin);
    std::atomic<std::uint64_t> next{begin};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
      try {
        for (std::uint64_t i = next++; i < end; i = next++) results[i - begin] = process(corpus, request, i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = end;
      }
    };
    if (jobs == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);

    for (auto& rows : results) {
      if (!rows) continue;
      ++summary.instances;
      for (const auto& row : *rows) {
        ++summary.rows;
        ++summary.counts[{row.theorem, row.relation}][row.verdict];
        if (row.verdict == Verdict::violated) ++summary.violated;
        sink(row);
      }
    }
  }
  return summary;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

json certificate_json(const Certificate& c) {
  if (const auto* labeling = std::get_if<VertexLabeling>(&c)) {
    return json{{"labels", std::vector<std::uint32_t>(labeling->labels().begin(), labeling->labels().end())}};
  }
  return json{{"members", std::get<VertexSet>(c).to_vector()}};
}

template <typename T>
T field(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

CorpusKind corpus_kind(const std::string& name) {
  static const std::map<std::string, CorpusKind> kinds{
      {"all-n", CorpusKind::all_n},          {"all-upto", CorpusKind::all_upto},
      {"lex-grid", CorpusKind::lex_grid},    {"pair-grid", CorpusKind::pair_grid},
      {"family", CorpusKind::family},        {"graph6", CorpusKind::graph6},
      {"random", CorpusKind::random_graphs}, {"random-trees", CorpusKind::random_trees},
      {"cycle-params", CorpusKind::cycle_params}};
  auto it = kinds.find(name);
  if (it == kinds.end()) fail(ErrorCode::invalid_argument, "unknown corpus kind \"" + name + "\"");
  return it->second;
}

}  // namespace

std::string to_json_line(const TheoremCheckResult& row, bool include_witness) {
  json j;
  j["theorem"] = theorem_name(row.theorem);
  j["instance"] = row.instance;
  j["relation"] = row.relation;
  j["verdict"] = std::string(verdict_name(row.verdict));
  j["lhs"] = row.lhs;
  j["rhs"] = row.rhs;
  if (!row.note.empty()) j["note"] = row.note;
  if (include_witness && !row.witness.empty()) {
    json w = json::array();
    for (const auto& entry : row.witness) {
      json e{{"name", entry.name}, {"kind", entry.kind}, {"graph", entry.graph6}, {"value", entry.value}};
      e.update(certificate_json(entry.certificate));
      w.push_back(std::move(e));
    }
    j["witness"] = std::move(w);
  }
  return j.dump();
}

VerifyRequest parse_verify_request(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::parse_error, std::string("verify request: ") + e.what());
  }
  try {
    VerifyRequest request;
    const auto& theorems = j.at("theorems");
    for (const auto& t : theorems) {
      const auto name = t.get<std::string>();
      if (name == "all") {
        for (int k = 1; k <= 15; ++k) {
          if (k != 15 && arity(static_cast<TheoremId>(k)) == 1) request.theorems.push_back(static_cast<TheoremId>(k));
        }
        continue;
      }
      const auto id = theorem_from_name(name);
      if (!id) fail(ErrorCode::invalid_argument, "unknown theorem id \"" + name + "\"");
      request.theorems.push_back(*id);
    }
    request.strict = field(j, "strict", false);
    request.witness_all = field<std::string>(j, "witness", "violated") == "all";
    request.jobs = field(j, "jobs", 1U);

    const auto& c = j.at("corpus");
    auto& spec = request.corpus;
    spec.kind = corpus_kind(c.at("kind").get<std::string>());
    spec.n = field<std::size_t>(c, "n", 0);
    spec.n_max = field<std::size_t>(c, "n_max", spec.n);
    spec.p = field(c, "p", 0.5);
    spec.seed = field<std::uint64_t>(c, "seed", 0);
    spec.count = field<std::size_t>(c, "count", 1);
    spec.filter = field<std::string>(c, "filter", "");
    spec.lines = field<std::vector<std::string>>(c, "lines", {});
    spec.parameters = field<std::vector<std::size_t>>(c, "parameters", {});
    if (c.contains("family")) {
      const auto& f = c.at("family");
      spec.family.name = f.at("name").get<std::string>();
      if (f.contains("params")) {
        for (const auto& [key, value] : f.at("params").items()) {
          spec.family.params[key] = value.is_string() ? value.get<std::string>() : value.dump();
        }
      }
    }
    if (spec.kind == CorpusKind::all_n || spec.kind == CorpusKind::all_upto) {
      if (spec.n < 1 || spec.n > GraphEnumerator::kMaxOrder) {
        fail(ErrorCode::invalid_argument, "enumeration order must lie in 1..7");
      }
    }
    return request;
  } catch (const json::exception& e) {
    fail(ErrorCode::parse_error, std::string("verify request: ") + e.what());
  }
}

std::string render_summary(const VerifySummary& summary) {
  constexpr std::array<Verdict, 5> kColumns{Verdict::holds, Verdict::equality, Verdict::violated, Verdict::report_only,
                                            Verdict::skipped};
  std::size_t width = std::string_view("relation").size();
  for (const auto& [key, counts] : summary.counts) width = std::max(width, key.relation.size());

  std::ostringstream out;
  out << std::left << std::setw(8) << "theorem" << std::setw(static_cast<int>(width) + 2) << "relation";
  for (auto v : kColumns) out << std::right << std::setw(12) << verdict_name(v);
  out << '\n';
  for (const auto& [key, counts] : summary.counts) {
    out << std::left << std::setw(8) << theorem_name(key.theorem) << std::setw(static_cast<int>(width) + 2)
        << key.relation;
    for (auto v : kColumns) {
      auto it = counts.find(v);
      out << std::right << std::setw(12) << (it == counts.end() ? 0 : it->second);
    }
    out << '\n';
  }
  out << "instances " << summary.instances << ", rows " << summary.rows << ", violated " << summary.violated << '\n';
  return out.str();
}

}  // namespace openpack
