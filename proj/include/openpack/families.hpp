#pragma once

#include <map>
#include <string>
#include <vector>

#include "openpack/graph.hpp"

namespace openpack {

/// A named generator plus its parameters, e.g. {"psi", {{"r","3"},{"s","2"}}}.
struct FamilySpec {
  std::string name;
  std::map<std::string, std::string> params;
};

/// Families and their parameters:
///   path n | cycle n | complete n | empty n | star n | complete-bipartite a b
///   random n p seed | tree-random n seed | psi r s | ng k | cart-sharp m n
Graph make_family(const FamilySpec& spec);

std::vector<std::string> family_names();

}  // namespace openpack
