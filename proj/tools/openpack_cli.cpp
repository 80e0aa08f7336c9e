// Command-line front end. Everything goes through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "openpack/openpack.h"

namespace {

using json = nlohmann::ordered_json;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(openpack_status status, const std::string& context) {
  if (status == OPENPACK_OK) return;
  throw CliError(context + ": " + openpack_status_name(status) + ": " + openpack_last_error());
}

struct GraphDeleter {
  void operator()(openpack_graph* g) const { openpack_graph_free(g); }
};
using GraphPtr = std::unique_ptr<openpack_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { openpack_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) { return OwnedString(s).get(); }

GraphPtr from_graph6(const std::string& text) {
  openpack_graph* g = nullptr;
  check(openpack_graph_from_graph6(text.c_str(), &g), "graph6 \"" + text + "\"");
  return GraphPtr(g);
}

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path);
  if (!in) throw CliError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> nonblank_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

// Graph inputs: explicit graph6 arguments, otherwise the input file (or
// stdin) read as graph6 lines or as a single edge list.
struct GraphInput {
  std::vector<std::string> graphs;
  std::string file;
  std::string format = "g6";

  void attach(CLI::App* app, bool positional = true) {
    if (positional) app->add_option("graphs", graphs, "graph6 strings (default: read input)");
    app->add_option("-i,--input", file, "input file, '-' for stdin");
    app->add_option("-f,--format", format, "input format")->check(CLI::IsMember({"g6", "edges"}));
  }

  std::vector<GraphPtr> load() const {
    std::vector<GraphPtr> out;
    if (!graphs.empty()) {
      for (const auto& g : graphs) out.push_back(from_graph6(g));
      return out;
    }
    const auto text = read_text(file);
    if (format == "edges") {
      openpack_graph* g = nullptr;
      check(openpack_graph_from_edge_list(text.c_str(), &g), "edge list");
      out.emplace_back(g);
      return out;
    }
    for (const auto& line : nonblank_lines(text)) out.push_back(from_graph6(line));
    return out;
  }
};

void print_graph(const openpack_graph* g, const std::string& format) {
  char* text = nullptr;
  if (format == "edges") {
    check(openpack_graph_to_edge_list(g, &text), "edge list");
    std::cout << take(text);
  } else {
    check(openpack_graph_to_graph6(g, &text), "graph6");
    std::cout << take(text) << '\n';
  }
}

std::vector<std::string> split_csv(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream in(item);
    std::string part;
    while (std::getline(in, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

extern "C" void write_line(const char* line, void* user) {
  auto& out = *static_cast<std::ostream*>(user);
  out << line << '\n';
}

extern "C" int print_enumerated(const char* graph6, void*) {
  std::cout << graph6 << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"openpack: open packing partitions, products and theorem checks"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph from a named family");
  std::string family;
  std::map<std::string, std::string> family_params;
  std::string gen_format = "g6";
  gen->add_option("family", family, "family name")->required();
  for (const char* key : {"n", "r", "s", "k", "m", "a", "b", "p", "seed"}) {
    gen->add_option_function<std::string>(std::string("--") + key,
                                          [&family_params, key](const std::string& v) { family_params[key] = v; },
                                          std::string("family parameter ") + key);
  }
  gen->add_option("--out-format", gen_format, "output format")->check(CLI::IsMember({"g6", "edges"}));

  // invariant
  auto* invariant = app.add_subcommand("invariant", "compute invariants, one JSON line per graph");
  GraphInput invariant_input;
  invariant_input.attach(invariant);
  std::vector<std::string> what;
  bool certify = false;
  invariant->add_option("-w,--what", what, "comma-separated invariants (default: all)");
  invariant->add_flag("--certify", certify, "include certificates");

  // transform
  auto* transform = app.add_subcommand("transform", "two-step graph, square or complement");
  GraphInput transform_input;
  transform_input.attach(transform);
  std::string transform_op;
  std::string transform_format = "g6";
  transform->add_option("--op", transform_op, "operation")
      ->required()
      ->check(CLI::IsMember({"two-step", "square", "complement"}));
  transform->add_option("--out-format", transform_format, "output format")->check(CLI::IsMember({"g6", "edges"}));

  // product
  auto* product = app.add_subcommand("product", "graph product of two graph6 inputs");
  std::string product_op;
  std::string left;
  std::string right;
  std::string layout_path;
  product->add_option("--op", product_op, "product")
      ->required()
      ->check(CLI::IsMember({"cart", "direct", "strong", "lex", "corona"}));
  product->add_option("first", left, "first factor G (graph6)")->required();
  product->add_option("second", right, "second factor H (graph6)")->required();
  product->add_option("--layout", layout_path, "write the vertex layout JSON here");

  // tree-opp
  auto* tree = app.add_subcommand("tree-opp", "OPP-function with Delta classes for a tree");
  GraphInput tree_input;
  tree_input.attach(tree);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "every labeled graph on n vertices as graph6");
  std::size_t enumerate_n = 0;
  enumerate->add_option("-n,--n", enumerate_n, "order")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "check theorems over a corpus, JSON lines on stdout");
  std::vector<std::string> theorems;
  std::size_t all_n = 0;
  std::size_t all_upto = 0;
  std::vector<std::size_t> lex_grid;
  std::vector<std::size_t> pair_grid;
  std::string verify_family;
  std::vector<std::string> verify_params;
  std::vector<std::string> graph6_items;
  std::string graph6_file;
  std::size_t random_n = 0;
  std::vector<std::size_t> random_trees;
  std::vector<std::string> t_values;
  double p = 0.5;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::string filter;
  bool strict = false;
  bool witness_all = false;
  unsigned jobs = 1;
  bool summary = false;
  std::string output;
  std::string request_file;
  verify->add_option("-t,--theorem", theorems, "theorem ids, e.g. T9 or T1,T2; 'all' for single-graph checks");
  auto* corpus = verify->add_option_group("corpus");
  corpus->add_option("--all-n", all_n, "every labeled graph on exactly n vertices");
  corpus->add_option("--all-upto", all_upto, "every labeled graph on 1..n vertices");
  corpus->add_option("--lex-grid", lex_grid, "connected G (2..A vertices) x every H (1..B)")->expected(2);
  corpus->add_option("--pair-grid", pair_grid, "every G (1..A) x every H (1..B)")->expected(2);
  corpus->add_option("--family", verify_family, "one graph from a family (see gen)");
  corpus->add_option("--graph6", graph6_items, "graph6 instance, or \"G H\" for a pair");
  corpus->add_option("--graph6-file", graph6_file, "file of graph6 lines");
  corpus->add_option("--random", random_n, "random graphs G(n, p); see --p, --count, --seed");
  corpus->add_option("--random-trees", random_trees, "random trees for each order in [NMIN, NMAX]")->expected(2);
  corpus->add_option("--t-values", t_values, "cycle parameters for T15, e.g. 1,2,3");
  corpus->add_option("--request", request_file, "raw JSON request file");
  corpus->require_option(1);
  verify->add_option("--param", verify_params, "family parameter key=value");
  verify->add_option("--p", p, "edge probability for --random");
  verify->add_option("--count", count, "samples for --random / per order for --random-trees");
  verify->add_option("--seed", seed, "base seed");
  verify->add_option("--filter", filter, "keep only matching graphs")
      ->check(CLI::IsMember({"connected", "even-cycle-free", "tree", "bipartite-complement", "no-isolated"}));
  verify->add_flag("--strict", strict, "assert the even-cycle-free chi = omega claim instead of reporting it");
  verify->add_flag("--witness", witness_all, "attach certificates to every row, not only violated ones");
  verify->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::Range(1U, 256U));
  verify->add_flag("--summary", summary, "print a summary table on stderr");
  verify->add_option("-o,--output", output, "write JSON lines here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      openpack_graph* g = nullptr;
      check(openpack_generate(family.c_str(), json(family_params).dump().c_str(), &g), "gen " + family);
      GraphPtr owned(g);
      print_graph(owned.get(), gen_format);
      return 0;
    }

    if (invariant->parsed()) {
      const auto selection = split_csv(what);
      std::string joined;
      for (const auto& s : selection) joined += (joined.empty() ? "" : ",") + s;
      for (const auto& g : invariant_input.load()) {
        char* text = nullptr;
        check(openpack_invariants(g.get(), joined.empty() ? nullptr : joined.c_str(), certify ? 1 : 0, &text),
              "invariant");
        std::cout << take(text) << '\n';
      }
      return 0;
    }

    if (transform->parsed()) {
      const auto op = transform_op == "two-step" ? OPENPACK_TWO_STEP
                      : transform_op == "square" ? OPENPACK_SQUARE
                                                 : OPENPACK_COMPLEMENT;
      for (const auto& g : transform_input.load()) {
        openpack_graph* out = nullptr;
        check(openpack_transform_graph(g.get(), op, &out), "transform");
        GraphPtr owned(out);
        print_graph(owned.get(), transform_format);
      }
      return 0;
    }

    if (product->parsed()) {
      const std::map<std::string, openpack_product> ops{{"cart", OPENPACK_CARTESIAN},
                                                        {"direct", OPENPACK_DIRECT},
                                                        {"strong", OPENPACK_STRONG},
                                                        {"lex", OPENPACK_LEXICOGRAPHIC},
                                                        {"corona", OPENPACK_CORONA}};
      auto g = from_graph6(left);
      auto h = from_graph6(right);
      openpack_graph* out = nullptr;
      char* layout = nullptr;
      check(openpack_product_graph(g.get(), h.get(), ops.at(product_op), &out, &layout), "product");
      GraphPtr owned(out);
      const auto layout_text = take(layout);
      print_graph(owned.get(), "g6");
      if (!layout_path.empty()) {
        std::ofstream file(layout_path);
        if (!file) throw CliError("cannot write " + layout_path);
        file << layout_text << '\n';
      }
      return 0;
    }

    if (tree->parsed()) {
      for (const auto& g : tree_input.load()) {
        std::vector<std::uint32_t> labels(openpack_graph_order(g.get()));
        check(openpack_tree_opp(g.get(), labels.data()), "tree-opp");
        char* text = nullptr;
        check(openpack_graph_to_graph6(g.get(), &text), "graph6");
        std::uint32_t classes = 0;
        for (auto l : labels) classes = std::max(classes, l);
        std::cout << json{{"graph", take(text)}, {"classes", classes}, {"labels", labels}}.dump() << '\n';
      }
      return 0;
    }

    if (enumerate->parsed()) {
      check(openpack_enumerate(enumerate_n, print_enumerated, nullptr), "enumerate");
      return 0;
    }

    if (verify->parsed()) {
      json request;
      if (!request_file.empty()) {
        request = json::parse(read_text(request_file));
      } else {
        json c;
        if (all_n != 0) {
          c = {{"kind", "all-n"}, {"n", all_n}};
        } else if (all_upto != 0) {
          c = {{"kind", "all-upto"}, {"n", all_upto}};
        } else if (!lex_grid.empty()) {
          c = {{"kind", "lex-grid"}, {"n", lex_grid[0]}, {"n_max", lex_grid[1]}};
        } else if (!pair_grid.empty()) {
          c = {{"kind", "pair-grid"}, {"n", pair_grid[0]}, {"n_max", pair_grid[1]}};
        } else if (!verify_family.empty()) {
          json params = json::object();
          for (const auto& kv : verify_params) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw CliError("--param expects key=value, got " + kv);
            params[kv.substr(0, eq)] = kv.substr(eq + 1);
          }
          c = {{"kind", "family"}, {"family", {{"name", verify_family}, {"params", params}}}};
        } else if (!graph6_items.empty()) {
          c = {{"kind", "graph6"}, {"lines", graph6_items}};
        } else if (!graph6_file.empty()) {
          c = {{"kind", "graph6"}, {"lines", nonblank_lines(read_text(graph6_file))}};
        } else if (random_n != 0) {
          c = {{"kind", "random"}, {"n", random_n}, {"p", p}, {"count", count}, {"seed", seed}};
        } else if (!random_trees.empty()) {
          c = {{"kind", "random-trees"}, {"n", random_trees[0]}, {"n_max", random_trees[1]}, {"count", count},
               {"seed", seed}};
        } else {
          std::vector<std::size_t> ts;
          for (const auto& t : split_csv(t_values)) ts.push_back(std::stoul(t));
          c = {{"kind", "cycle-params"}, {"parameters", ts}};
        }
        if (!filter.empty()) c["filter"] = filter;
        auto ids = split_csv(theorems);
        if (ids.empty()) throw CliError("verify needs --theorem");
        request = {{"theorems", ids}, {"corpus", c}, {"strict", strict}, {"witness", witness_all ? "all" : "violated"}};
      }
      request["jobs"] = jobs;

      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!output.empty()) {
        file.open(output);
        if (!file) throw CliError("cannot write " + output);
        out = &file;
      }
      char* table = nullptr;
      std::uint64_t violated = 0;
      check(openpack_verify(request.dump().c_str(), write_line, out, &table, &violated), "verify");
      const auto table_text = take(table);
      out->flush();
      if (summary) std::cerr << table_text;
      return violated == 0 ? 0 : 1;
    }
  } catch (const CliError& e) {
    std::cerr << "openpack: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "openpack: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
