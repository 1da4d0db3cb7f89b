#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "gcx/gcx.h"

TEST(CApi, GraphAndComplex) {
  gcx_graph* g = nullptr;
  ASSERT_EQ(gcx_graph_family("cycle-complement", 12, nullptr, 0, 0, &g), GCX_OK);
  EXPECT_EQ(gcx_graph_vertex_count(g), 12);
  EXPECT_EQ(gcx_graph_edge_count(g), 54u);
  gcx_complex* k = nullptr;
  ASSERT_EQ(gcx_complex_from_graph(g, 0, &k), GCX_OK);
  size_t len = 0;
  ASSERT_EQ(gcx_complex_betti(k, nullptr, 0, &len), GCX_OK);
  ASSERT_EQ(len, 6u);
  int64_t b[6];
  ASSERT_EQ(gcx_complex_betti(k, b, 6, &len), GCX_OK);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b[3], 2);
  int64_t chi = 0;
  ASSERT_EQ(gcx_complex_euler(k, &chi), GCX_OK);
  EXPECT_EQ(chi, -1);
  char* w = nullptr;
  ASSERT_EQ(gcx_complex_wu(k, 2, &w), GCX_OK);
  EXPECT_STREQ(w, "1");
  gcx_string_free(w);
  gcx_complex_free(k);
  gcx_graph_free(g);
}

TEST(CApi, Errors) {
  gcx_graph* g = nullptr;
  EXPECT_EQ(gcx_graph_family("nope", 5, nullptr, 0, 0, &g), GCX_ERR_INVALID);
  EXPECT_NE(std::string(gcx_last_error()).find("unknown family"), std::string::npos);
  EXPECT_EQ(g, nullptr);
  EXPECT_EQ(gcx_graph_family(nullptr, 5, nullptr, 0, 0, &g), GCX_ERR_INVALID);
  gcx_complex* k = nullptr;
  EXPECT_EQ(gcx_complex_dual_cycle(40, &k), GCX_ERR_BOUND);
  ASSERT_EQ(gcx_graph_family("cycle-complement", 12, nullptr, 0, 0, &g), GCX_OK);
  EXPECT_EQ(gcx_complex_from_graph(g, 10, &k), GCX_ERR_BOUND);
  gcx_graph_free(g);
  ASSERT_EQ(gcx_graph_family("cycle-complement", 6, nullptr, 0, 0, &g), GCX_OK);
  EXPECT_STREQ(gcx_last_error(), "");
  gcx_graph_free(g);
}

TEST(CApi, EdgesAndJson) {
  int edges[] = {0, 1, 1, 2, 2, 0};
  gcx_graph* g = nullptr;
  ASSERT_EQ(gcx_graph_from_edges(3, edges, 3, &g), GCX_OK);
  char* text = nullptr;
  ASSERT_EQ(gcx_graph_to_json(g, &text), GCX_OK);
  gcx_graph* h = nullptr;
  ASSERT_EQ(gcx_graph_from_json(text, &h), GCX_OK);
  EXPECT_EQ(gcx_graph_edge_count(h), 3u);
  gcx_string_free(text);
  char* curv = nullptr;
  ASSERT_EQ(gcx_graph_curvature(g, &curv), GCX_OK);
  EXPECT_STREQ(curv, "[\"1/3\",\"1/3\",\"1/3\"]");
  gcx_string_free(curv);
  char* cls = nullptr;
  ASSERT_EQ(gcx_graph_classify(g, &cls), GCX_OK);
  EXPECT_NE(std::string(cls).find("\"point\""), std::string::npos);
  gcx_string_free(cls);
  gcx_graph_free(h);
  gcx_graph_free(g);
}

TEST(CApi, Trees) {
  gcx_graph* g = nullptr;
  ASSERT_EQ(gcx_graph_family("path-complement", 7, nullptr, 0, 0, &g), GCX_OK);
  char* t = nullptr;
  char* f = nullptr;
  ASSERT_EQ(gcx_graph_rooted_trees(g, &t), GCX_OK);
  ASSERT_EQ(gcx_graph_rooted_forests(g, &f), GCX_OK);
  EXPECT_STREQ(t, "12649");
  EXPECT_STREQ(f, "40391");
  gcx_string_free(t);
  gcx_string_free(f);
  gcx_graph_free(g);
}

TEST(CApi, Run) {
  gcx_request r;
  gcx_request_init(&r);
  r.command = "table";
  r.table = "tree-forest";
  r.max_n = 5;
  char* out = nullptr;
  ASSERT_EQ(gcx_run(&r, &out), GCX_OK);
  EXPECT_STREQ(out, "n,tree_cycle,forest_cycle,tree_path,forest_path\n4,4,9,4,21\n5,25,121,55,209\n");
  gcx_string_free(out);
  r.command = "bogus";
  EXPECT_EQ(gcx_run(&r, &out), GCX_ERR_INVALID);
}
