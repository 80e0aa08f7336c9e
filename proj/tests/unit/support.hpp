#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "openpack/generators.hpp"
#include "openpack/graph.hpp"
#include "openpack/io.hpp"

namespace testing_support {

inline std::string data_path(const std::string& name) { return std::string(OPENPACK_TEST_DATA) + "/" + name; }

inline std::vector<std::string> data_lines(const std::string& name) {
  std::ifstream in(data_path(name));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

inline openpack::Graph g6(const std::string& text) { return openpack::parse_graph6(text); }

/// Every labeled graph on 1..n vertices.
inline std::vector<openpack::Graph> all_graphs(std::size_t n) {
  std::vector<openpack::Graph> out;
  for (std::size_t k = 1; k <= n; ++k) {
    openpack::GraphEnumerator e(k);
    e.for_each([&](const openpack::Graph& g) { out.push_back(g); });
  }
  return out;
}

}  // namespace testing_support
