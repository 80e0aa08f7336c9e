#include "openpack/openpack.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "openpack/constructions.hpp"
#include "openpack/error.hpp"
#include "openpack/families.hpp"
#include "openpack/generators.hpp"
#include "openpack/harness.hpp"
#include "openpack/io.hpp"
#include "openpack/isomorphism.hpp"
#include "openpack/products.hpp"
#include "openpack/solvers.hpp"
#include "openpack/transforms.hpp"

struct openpack_graph {
  openpack::Graph graph;
};

namespace {

using openpack::ErrorCode;
using json = nlohmann::ordered_json;

thread_local std::string last_error;

openpack_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
      return OPENPACK_INVALID_ARGUMENT;
    case ErrorCode::parse_error:
      return OPENPACK_PARSE_ERROR;
    case ErrorCode::cap_exceeded:
      return OPENPACK_CAP_EXCEEDED;
    case ErrorCode::undefined:
      return OPENPACK_UNDEFINED;
    case ErrorCode::hypothesis:
      return OPENPACK_HYPOTHESIS;
    case ErrorCode::io_error:
      return OPENPACK_IO_ERROR;
    case ErrorCode::internal:
      return OPENPACK_INTERNAL;
  }
  return OPENPACK_INTERNAL;
}

template <typename Fn>
openpack_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return OPENPACK_OK;
  } catch (const openpack::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const json::exception& e) {
    last_error = e.what();
    return OPENPACK_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OPENPACK_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OPENPACK_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) openpack::fail(ErrorCode::invalid_argument, what);
}

char* copy_out(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

openpack_graph* wrap(openpack::Graph g) { return new openpack_graph{std::move(g)}; }

json certificate_json(const openpack::Certificate& c) {
  if (const auto* f = std::get_if<openpack::VertexLabeling>(&c)) {
    return json{{"labels", std::vector<std::uint32_t>(f->labels().begin(), f->labels().end())}};
  }
  return json{{"members", std::get<openpack::VertexSet>(c).to_vector()}};
}

std::vector<openpack::Invariant> parse_what(const char* what) {
  std::vector<openpack::Invariant> out;
  const std::string text = what == nullptr ? "all" : what;
  if (text.empty() || text == "all") {
    auto all = openpack::all_invariants();
    return {all.begin(), all.end()};
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto name = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto inv = openpack::invariant_from_name(name);
    if (!inv) openpack::fail(ErrorCode::invalid_argument, "unknown invariant \"" + name + "\"");
    out.push_back(*inv);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* openpack_last_error(void) { return last_error.c_str(); }

const char* openpack_status_name(openpack_status status) {
  switch (status) {
    case OPENPACK_OK:
      return "ok";
    case OPENPACK_INVALID_ARGUMENT:
      return "invalid argument";
    case OPENPACK_PARSE_ERROR:
      return "parse error";
    case OPENPACK_CAP_EXCEEDED:
      return "cap exceeded";
    case OPENPACK_UNDEFINED:
      return "undefined";
    case OPENPACK_HYPOTHESIS:
      return "hypothesis violated";
    case OPENPACK_IO_ERROR:
      return "i/o error";
    case OPENPACK_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void openpack_string_free(char* s) { std::free(s); }

size_t openpack_solver_cap(void) { return openpack::solver_cap(); }

openpack_status openpack_graph_from_edges(size_t order, const uint32_t* pairs, size_t edge_count,
                                          openpack_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    require(pairs != nullptr || edge_count == 0, "null edge array");
    std::vector<openpack::Edge> edges(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges[i] = {pairs[2 * i], pairs[2 * i + 1]};
    *out = wrap(openpack::Graph::from_edge_list(order, edges));
  });
}

openpack_status openpack_graph_from_graph6(const char* text, openpack_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = wrap(openpack::parse_graph6(text));
  });
}

openpack_status openpack_graph_from_edge_list(const char* text, openpack_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = wrap(openpack::parse_edge_list(text));
  });
}

void openpack_graph_free(openpack_graph* g) { delete g; }

size_t openpack_graph_order(const openpack_graph* g) { return g == nullptr ? 0 : g->graph.order(); }

size_t openpack_graph_size(const openpack_graph* g) { return g == nullptr ? 0 : g->graph.size(); }

openpack_status openpack_graph_edges(const openpack_graph* g, uint32_t* pairs, size_t capacity) {
  return guarded([&] {
    require(g != nullptr, "null graph");
    const auto edges = g->graph.edges();
    require(capacity >= edges.size() && (pairs != nullptr || edges.empty()), "edge buffer too small");
    for (size_t i = 0; i < edges.size(); ++i) {
      pairs[2 * i] = edges[i].first;
      pairs[2 * i + 1] = edges[i].second;
    }
  });
}

openpack_status openpack_graph_to_graph6(const openpack_graph* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = copy_out(openpack::to_graph6(g->graph));
  });
}

openpack_status openpack_graph_to_edge_list(const openpack_graph* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = copy_out(openpack::to_edge_list(g->graph));
  });
}

openpack_status openpack_is_isomorphic(const openpack_graph* g, const openpack_graph* h, int* out) {
  return guarded([&] {
    require(g != nullptr && h != nullptr && out != nullptr, "null argument");
    *out = openpack::is_isomorphic(g->graph, h->graph) ? 1 : 0;
  });
}

openpack_status openpack_generate(const char* family, const char* params_json, openpack_graph** out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "null argument");
    openpack::FamilySpec spec{family, {}};
    if (params_json != nullptr && *params_json != '\0') {
      const auto params = json::parse(params_json);
      require(params.is_object(), "family parameters must be a JSON object");
      for (const auto& [key, value] : params.items()) {
        spec.params[key] = value.is_string() ? value.get<std::string>() : value.dump();
      }
    }
    *out = wrap(openpack::make_family(spec));
  });
}

openpack_status openpack_family_names(char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    *out_json = copy_out(json(openpack::family_names()).dump());
  });
}

openpack_status openpack_transform_graph(const openpack_graph* g, openpack_transform op, openpack_graph** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    switch (op) {
      case OPENPACK_TWO_STEP:
        *out = wrap(openpack::two_step(g->graph));
        return;
      case OPENPACK_SQUARE:
        *out = wrap(openpack::square(g->graph));
        return;
      case OPENPACK_COMPLEMENT:
        *out = wrap(openpack::complement(g->graph));
        return;
    }
    openpack::fail(ErrorCode::invalid_argument, "unknown transform");
  });
}

openpack_status openpack_product_graph(const openpack_graph* g, const openpack_graph* h, openpack_product op,
                                       openpack_graph** out, char** layout_json) {
  return guarded([&] {
    require(g != nullptr && h != nullptr && out != nullptr, "null argument");
    json layout;
    std::optional<openpack::Graph> result;
    if (op == OPENPACK_CORONA) {
      auto p = openpack::corona(g->graph, h->graph);
      layout["kind"] = "corona";
      layout["g_order"] = p.layout.g_order();
      layout["h_order"] = p.layout.h_order();
      json copies = json::array();
      for (openpack::Vertex i = 0; i < p.layout.g_order(); ++i) {
        copies.push_back({{"attached_to", i}, {"first", p.layout.copy_begin(i)}});
      }
      layout["copies"] = std::move(copies);
      result.emplace(std::move(p.graph));
    } else {
      openpack::ProductKind kind{};
      const char* name = "";
      switch (op) {
        case OPENPACK_CARTESIAN:
          kind = openpack::ProductKind::cartesian, name = "cartesian";
          break;
        case OPENPACK_DIRECT:
          kind = openpack::ProductKind::direct, name = "direct";
          break;
        case OPENPACK_STRONG:
          kind = openpack::ProductKind::strong, name = "strong";
          break;
        case OPENPACK_LEXICOGRAPHIC:
          kind = openpack::ProductKind::lexicographic, name = "lexicographic";
          break;
        default:
          openpack::fail(ErrorCode::invalid_argument, "unknown product");
      }
      auto p = openpack::graph_product(kind, g->graph, h->graph);
      layout["kind"] = name;
      layout["g_order"] = p.layout.g_order();
      layout["h_order"] = p.layout.h_order();
      json pairs = json::array();
      for (openpack::Vertex v = 0; v < p.layout.size(); ++v) {
        const auto [a, b] = p.layout.pair(v);
        pairs.push_back({a, b});
      }
      layout["pairs"] = std::move(pairs);
      result.emplace(std::move(p.graph));
    }
    std::unique_ptr<openpack_graph> handle(wrap(std::move(*result)));
    if (layout_json != nullptr) *layout_json = copy_out(layout.dump());
    *out = handle.release();
  });
}

openpack_status openpack_invariants(const openpack_graph* g, const char* what, int certify, char** out_json) {
  return guarded([&] {
    require(g != nullptr && out_json != nullptr, "null argument");
    const auto which = parse_what(what);
    const auto report = openpack::compute_invariants(g->graph, which);
    json j;
    j["graph"] = openpack::to_graph6(g->graph);
    json values = json::object();
    for (auto inv : which) {
      const std::string name(openpack::invariant_name(inv));
      auto it = report.values.find(name);
      if (it != report.values.end()) values[name] = it->second;
    }
    j["values"] = std::move(values);
    if (!report.undefined.empty()) j["undefined"] = report.undefined;
    if (certify != 0) {
      json certs = json::object();
      for (auto inv : which) {
        const std::string name(openpack::invariant_name(inv));
        auto it = report.certificates.find(name);
        if (it != report.certificates.end()) certs[name] = certificate_json(it->second);
      }
      j["certificates"] = std::move(certs);
    }
    *out_json = copy_out(j.dump());
  });
}

openpack_status openpack_open_packing_partition(const openpack_graph* g, uint32_t* value, uint32_t* labels) {
  return guarded([&] {
    require(g != nullptr && value != nullptr, "null argument");
    const auto c = openpack::open_packing_partition_number(g->graph);
    *value = c.colors;
    if (labels != nullptr) std::copy(c.labeling.labels().begin(), c.labeling.labels().end(), labels);
  });
}

openpack_status openpack_tree_opp(const openpack_graph* g, uint32_t* labels) {
  return guarded([&] {
    require(g != nullptr && labels != nullptr, "null argument");
    const auto f = openpack::tree_opp(g->graph);
    std::copy(f.labels().begin(), f.labels().end(), labels);
  });
}

openpack_status openpack_enumerate(size_t order, openpack_graph_fn fn, void* user) {
  return guarded([&] {
    require(fn != nullptr, "null callback");
    const openpack::GraphEnumerator e(order);
    for (std::uint64_t k = 0; k < e.count(); ++k) {
      if (fn(openpack::to_graph6(e.at(k)).c_str(), user) != 0) break;
    }
  });
}

openpack_status openpack_verify(const char* request_json, openpack_line_fn fn, void* user, char** summary,
                                uint64_t* violated) {
  return guarded([&] {
    require(request_json != nullptr, "null request");
    const auto request = openpack::parse_verify_request(request_json);
    const auto result = openpack::run_corpus(request, [&](const openpack::TheoremCheckResult& row) {
      if (fn == nullptr) return;
      const bool witness = request.witness_all || row.verdict == openpack::Verdict::violated;
      fn(openpack::to_json_line(row, witness).c_str(), user);
    });
    if (summary != nullptr) *summary = copy_out(openpack::render_summary(result));
    if (violated != nullptr) *violated = result.violated;
  });
}

}  // extern "C"
