#include "openpack/io.hpp"

#include <sstream>
#include <vector>

#include "openpack/error.hpp"

namespace openpack {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - kOffset;
  if (value < 0 || value > 63) {
    fail(ErrorCode::parse_error, "graph6: character code " + std::to_string(static_cast<unsigned char>(c)) +
                                     " outside the printable range 63..126");
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  if (line.empty()) fail(ErrorCode::parse_error, "graph6: empty record");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (line[0] != '~') {
    n = static_cast<std::size_t>(sextet(line[0]));
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == '~') {
      fail(ErrorCode::cap_exceeded, "graph6: eight-byte size header (n > 258047) is not supported");
    }
    if (line.size() < 4) fail(ErrorCode::parse_error, "graph6: malformed size header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(line[i]));
    if (n < 63) fail(ErrorCode::parse_error, "graph6: four-byte size header used for n < 63");
    pos = 4;
  }
  if (n == 0) fail(ErrorCode::invalid_argument, "graph6: graphs must have at least one vertex");
  if (n > kMaxGraphOrder) fail(ErrorCode::cap_exceeded, "graph6: order " + std::to_string(n) + " exceeds the limit");

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  const std::size_t available = line.size() - pos;
  if (available < expected) fail(ErrorCode::parse_error, "graph6: truncated adjacency payload");
  if (available > expected) fail(ErrorCode::parse_error, "graph6: trailing characters after adjacency payload");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = sextet(line[pos + k / 6]);
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(line.back());
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) fail(ErrorCode::parse_error, "graph6: nonzero padding bits");
  }
  return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    const auto words = g.neighbor_words(j);
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((words[i >> 6] >> (i & 63)) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) fail(ErrorCode::parse_error, "edge list: expected header \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) fail(ErrorCode::parse_error, "edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0) fail(ErrorCode::invalid_argument, "edge list: negative vertex index");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) fail(ErrorCode::parse_error, "edge list: trailing data after " + std::to_string(m) + " edges");
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace openpack
