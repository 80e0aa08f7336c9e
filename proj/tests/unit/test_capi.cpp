#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"
#include "openpack/openpack.h"

namespace {

struct Handle {
  openpack_graph* g = nullptr;
  ~Handle() { openpack_graph_free(g); }
};

std::string take(char* s) {
  std::string out = s;
  openpack_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, BuildQueryAndEncode) {
  const uint32_t pairs[] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 0};
  Handle c5;
  ASSERT_EQ(openpack_graph_from_edges(5, pairs, 5, &c5.g), OPENPACK_OK);
  EXPECT_EQ(openpack_graph_order(c5.g), 5U);
  EXPECT_EQ(openpack_graph_size(c5.g), 5U);
  char* text = nullptr;
  ASSERT_EQ(openpack_graph_to_graph6(c5.g, &text), OPENPACK_OK);
  EXPECT_EQ(take(text), "Dhc");
  std::vector<uint32_t> edges(10);
  ASSERT_EQ(openpack_graph_edges(c5.g, edges.data(), 5), OPENPACK_OK);
  EXPECT_EQ(edges, (std::vector<uint32_t>{0, 1, 0, 4, 1, 2, 2, 3, 3, 4}));
  EXPECT_EQ(openpack_graph_edges(c5.g, edges.data(), 4), OPENPACK_INVALID_ARGUMENT);

  Handle parsed;
  ASSERT_EQ(openpack_graph_from_graph6("Dhc", &parsed.g), OPENPACK_OK);
  int iso = 0;
  ASSERT_EQ(openpack_is_isomorphic(c5.g, parsed.g, &iso), OPENPACK_OK);
  EXPECT_EQ(iso, 1);

  ASSERT_EQ(openpack_graph_to_edge_list(c5.g, &text), OPENPACK_OK);
  Handle from_list;
  ASSERT_EQ(openpack_graph_from_edge_list(take(text).c_str(), &from_list.g), OPENPACK_OK);
  ASSERT_EQ(openpack_is_isomorphic(c5.g, from_list.g, &iso), OPENPACK_OK);
  EXPECT_EQ(iso, 1);
}

TEST(CApi, ErrorsAreReported) {
  openpack_graph* g = nullptr;
  EXPECT_EQ(openpack_graph_from_graph6("B", &g), OPENPACK_PARSE_ERROR);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(openpack_last_error()), "");
  const uint32_t loop[] = {1, 1};
  EXPECT_EQ(openpack_graph_from_edges(3, loop, 1, &g), OPENPACK_INVALID_ARGUMENT);
  EXPECT_EQ(openpack_graph_from_graph6(nullptr, &g), OPENPACK_INVALID_ARGUMENT);
  EXPECT_EQ(openpack_generate("cycle", R"({"n": 2})", &g), OPENPACK_INVALID_ARGUMENT);
  EXPECT_EQ(openpack_generate("cycle", "{", &g), OPENPACK_PARSE_ERROR);
  EXPECT_STREQ(openpack_status_name(OPENPACK_CAP_EXCEEDED), "cap exceeded");

  Handle big;
  ASSERT_EQ(openpack_generate("cycle", R"({"n": 65})", &big.g), OPENPACK_OK);
  uint32_t value = 0;
  EXPECT_EQ(openpack_open_packing_partition(big.g, &value, nullptr), OPENPACK_CAP_EXCEEDED);
  Handle c5;
  ASSERT_EQ(openpack_generate("cycle", R"({"n": 5})", &c5.g), OPENPACK_OK);
  std::vector<uint32_t> labels(5);
  EXPECT_EQ(openpack_tree_opp(c5.g, labels.data()), OPENPACK_HYPOTHESIS);
  EXPECT_EQ(std::string(openpack_last_error()), "tree_opp input is not a tree");
  char* out = nullptr;
  EXPECT_EQ(openpack_invariants(c5.g, "p_o,bogus", 0, &out), OPENPACK_INVALID_ARGUMENT);
  EXPECT_EQ(openpack_graph_from_graph6("Dhc", &g), OPENPACK_OK);
  EXPECT_EQ(std::string(openpack_last_error()), "");
  openpack_graph_free(g);
}

TEST(CApi, InvariantsJson) {
  Handle petersen;
  ASSERT_EQ(openpack_graph_from_graph6("IheA@GUAo", &petersen.g), OPENPACK_OK);
  char* out = nullptr;
  ASSERT_EQ(openpack_invariants(petersen.g, "p_o,rho_o,chi2", 1, &out), OPENPACK_OK);
  const auto j = nlohmann::json::parse(take(out));
  EXPECT_EQ(j["values"]["p_o"], 5);
  EXPECT_EQ(j["values"]["rho_o"], 2);
  EXPECT_EQ(j["values"]["chi2"], 10);
  EXPECT_EQ(j["certificates"]["p_o"]["labels"].size(), 10U);
  EXPECT_EQ(j["certificates"]["rho_o"]["members"].size(), 2U);

  Handle k13;
  ASSERT_EQ(openpack_generate("star", R"({"n": 4})", &k13.g), OPENPACK_OK);
  Handle iso;
  ASSERT_EQ(openpack_generate("empty", R"({"n": 2})", &iso.g), OPENPACK_OK);
  ASSERT_EQ(openpack_invariants(iso.g, nullptr, 0, &out), OPENPACK_OK);
  const auto e = nlohmann::json::parse(take(out));
  EXPECT_EQ(e["undefined"][0], "gamma_t");
  EXPECT_FALSE(e.contains("certificates"));
}

TEST(CApi, TransformsAndProducts) {
  Handle c6;
  ASSERT_EQ(openpack_generate("cycle", R"({"n": 6})", &c6.g), OPENPACK_OK);
  Handle n;
  ASSERT_EQ(openpack_transform_graph(c6.g, OPENPACK_TWO_STEP, &n.g), OPENPACK_OK);
  EXPECT_EQ(openpack_graph_size(n.g), 6U);
  Handle sq;
  ASSERT_EQ(openpack_transform_graph(c6.g, OPENPACK_SQUARE, &sq.g), OPENPACK_OK);
  EXPECT_EQ(openpack_graph_size(sq.g), 12U);

  Handle k2;
  ASSERT_EQ(openpack_generate("complete", R"({"n": 2})", &k2.g), OPENPACK_OK);
  Handle p;
  char* layout = nullptr;
  ASSERT_EQ(openpack_product_graph(c6.g, k2.g, OPENPACK_CARTESIAN, &p.g, &layout), OPENPACK_OK);
  EXPECT_EQ(openpack_graph_order(p.g), 12U);
  const auto l = nlohmann::json::parse(take(layout));
  EXPECT_EQ(l["kind"], "cartesian");
  EXPECT_EQ(l["pairs"][3], nlohmann::json({1, 1}));
  Handle c;
  ASSERT_EQ(openpack_product_graph(k2.g, k2.g, OPENPACK_CORONA, &c.g, &layout), OPENPACK_OK);
  EXPECT_EQ(openpack_graph_size(c.g), 7U);
  EXPECT_EQ(nlohmann::json::parse(take(layout))["copies"][1]["first"], 4);
}

TEST(CApi, TreeOppAndEnumerate) {
  Handle t;
  ASSERT_EQ(openpack_generate("tree-random", R"({"n": 40, "seed": 3})", &t.g), OPENPACK_OK);
  std::vector<uint32_t> labels(40);
  ASSERT_EQ(openpack_tree_opp(t.g, labels.data()), OPENPACK_OK);
  uint32_t value = 0;
  std::vector<uint32_t> opt(40);
  ASSERT_EQ(openpack_open_packing_partition(t.g, &value, opt.data()), OPENPACK_OK);
  EXPECT_EQ(*std::max_element(labels.begin(), labels.end()), value);

  std::vector<std::string> seen;
  auto collect = [](const char* g6, void* user) {
    static_cast<std::vector<std::string>*>(user)->push_back(g6);
    return 0;
  };
  ASSERT_EQ(openpack_enumerate(3, collect, &seen), OPENPACK_OK);
  EXPECT_EQ(seen.size(), 8U);
  EXPECT_EQ(seen.front(), "B?");
  EXPECT_EQ(seen.back(), "Bw");
  int calls = 0;
  auto stop = [](const char*, void* user) { return ++*static_cast<int*>(user) == 2 ? 1 : 0; };
  ASSERT_EQ(openpack_enumerate(4, stop, &calls), OPENPACK_OK);
  EXPECT_EQ(calls, 2);
}

TEST(CApi, Verify) {
  std::vector<std::string> lines;
  auto sink = [](const char* line, void* user) { static_cast<std::vector<std::string>*>(user)->push_back(line); };
  char* summary = nullptr;
  uint64_t violated = 99;
  ASSERT_EQ(openpack_verify(R"({"theorems": ["T9"], "corpus": {"kind": "all-n", "n": 4}})", sink, &lines, &summary,
                            &violated),
            OPENPACK_OK);
  EXPECT_EQ(lines.size(), 64U);
  EXPECT_EQ(violated, 0U);
  EXPECT_NE(take(summary).find("instances 64"), std::string::npos);
  const auto first = nlohmann::json::parse(lines[0]);
  EXPECT_EQ(first["theorem"], "T9");
  EXPECT_EQ(first["instance"], "C?");
  EXPECT_EQ(openpack_verify("{}", sink, &lines, nullptr, nullptr), OPENPACK_PARSE_ERROR);
  char* names = nullptr;
  ASSERT_EQ(openpack_family_names(&names), OPENPACK_OK);
  EXPECT_NE(take(names).find("cart-sharp"), std::string::npos);
}
