#include "openpack/families.hpp"

#include <charconv>
#include <functional>

#include "openpack/constructions.hpp"
#include "openpack/error.hpp"
#include "openpack/generators.hpp"

namespace openpack {

namespace {

const std::string& param(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) fail(ErrorCode::invalid_argument, "family " + spec.name + " needs parameter " + key);
  return it->second;
}

std::uint64_t integer(const FamilySpec& spec, const std::string& key) {
  const auto& text = param(spec, key);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::invalid_argument, "parameter " + key + " must be a non-negative integer, got \"" + text + "\"");
  }
  return value;
}

double real(const FamilySpec& spec, const std::string& key) {
  const auto& text = param(spec, key);
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  fail(ErrorCode::invalid_argument, "parameter " + key + " must be a number, got \"" + text + "\"");
}

using Maker = std::function<Graph(const FamilySpec&)>;

const std::map<std::string, Maker>& makers() {
  static const std::map<std::string, Maker> table{
      {"path", [](const FamilySpec& s) { return path(integer(s, "n")); }},
      {"cycle", [](const FamilySpec& s) { return cycle(integer(s, "n")); }},
      {"complete", [](const FamilySpec& s) { return complete(integer(s, "n")); }},
      {"empty", [](const FamilySpec& s) { return empty_graph(integer(s, "n")); }},
      {"star", [](const FamilySpec& s) { return star(integer(s, "n")); }},
      {"complete-bipartite",
       [](const FamilySpec& s) { return complete_bipartite(integer(s, "a"), integer(s, "b")); }},
      {"random",
       [](const FamilySpec& s) { return random_graph(integer(s, "n"), real(s, "p"), integer(s, "seed")); }},
      {"tree-random", [](const FamilySpec& s) { return random_tree(integer(s, "n"), integer(s, "seed")); }},
      {"psi", [](const FamilySpec& s) { return psi_graph({integer(s, "r"), integer(s, "s")}); }},
      {"ng", [](const FamilySpec& s) { return ng_extremal(integer(s, "k")); }},
      {"cart-sharp", [](const FamilySpec& s) { return cart_sharp_instance(integer(s, "m"), integer(s, "n")); }},
  };
  return table;
}

}  // namespace

Graph make_family(const FamilySpec& spec) {
  auto it = makers().find(spec.name);
  if (it == makers().end()) fail(ErrorCode::invalid_argument, "unknown family \"" + spec.name + "\"");
  return it->second(spec);
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [name, maker] : makers()) out.push_back(name);
  return out;
}

}  // namespace openpack
