#include <gtest/gtest.h>

#include <sstream>

#include "openpack/error.hpp"
#include "openpack/io.hpp"
#include "support.hpp"

using namespace openpack;

namespace {

ErrorCode parse_error_code(const std::string& text) {
  try {
    parse_graph6(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

// Fixture lines: "<graph6> <n> <u-v,u-v,...>" ("-" for no edges), written by
// tests/oracles/make_graph6_fixtures.py with networkx.
struct Fixture {
  std::string text;
  std::size_t n;
  std::vector<Edge> edges;
};

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  for (const auto& line : testing_support::data_lines("graph6_fixtures.txt")) {
    std::istringstream in(line);
    Fixture f;
    std::string edges;
    in >> f.text >> f.n >> edges;
    if (edges != "-") {
      std::istringstream e(edges);
      std::string pair;
      while (std::getline(e, pair, ',')) {
        const auto dash = pair.find('-');
        f.edges.emplace_back(std::stoul(pair.substr(0, dash)), std::stoul(pair.substr(dash + 1)));
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

TEST(Graph6, MatchesReferenceEncoder) {
  const auto all = fixtures();
  ASSERT_GE(all.size(), 10U);
  for (const auto& f : all) {
    const auto expected = Graph::from_edge_list(f.n, f.edges);
    EXPECT_EQ(parse_graph6(f.text), expected) << f.text;
    EXPECT_EQ(to_graph6(expected), f.text) << "n=" << f.n;
  }
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(complete(2)), "A_");
  EXPECT_EQ(to_graph6(cycle(5)), "Dhc");
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), complete(3));
  EXPECT_EQ(parse_graph6("Bw\r\n"), complete(3));
}

TEST(Graph6, LongHeaderRoundTrip) {
  for (std::size_t n : {62U, 63U, 64U, 200U}) {
    const auto g = random_graph(n, 0.1, n);
    const auto text = to_graph6(g);
    EXPECT_EQ(text[0] == '~', n >= 63) << n;
    EXPECT_EQ(parse_graph6(text), g) << n;
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_EQ(parse_error_code(""), ErrorCode::parse_error);
  EXPECT_EQ(parse_error_code("?"), ErrorCode::invalid_argument);  // n = 0
  EXPECT_EQ(parse_error_code("B"), ErrorCode::parse_error);       // truncated
  EXPECT_EQ(parse_error_code("Bww"), ErrorCode::parse_error);     // trailing byte
  EXPECT_EQ(parse_error_code("B\x7f"), ErrorCode::parse_error);   // outside 63..126
  EXPECT_EQ(parse_error_code("Bx"), ErrorCode::parse_error);      // nonzero padding
  EXPECT_EQ(parse_error_code("~??D"), ErrorCode::parse_error);    // long header for n < 63
  EXPECT_EQ(parse_error_code("~~??????"), ErrorCode::cap_exceeded);
}

TEST(EdgeList, RoundTripAndErrors) {
  const auto g = random_graph(9, 0.4, 11);
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  EXPECT_EQ(parse_edge_list("3 2\n0 1\n1 2\n"), path(3));
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), Error);
  EXPECT_THROW(parse_edge_list("3 1\n0 7\n"), Error);
  EXPECT_THROW(parse_edge_list("x"), Error);
}
