#include <gtest/gtest.h>

#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include "grpwl/descriptors.hpp"
#include "grpwl/error.hpp"
#include "grpwl/graph.hpp"
#include "grpwl/io.hpp"
#include "grpwl/wl.hpp"

using namespace grpwl;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

Verdict compare(const Graph& a, const Graph& b, std::size_t k) {
  auto l = RefinableStructure::graph(std::make_shared<const Graph>(a));
  auto r = RefinableStructure::graph(std::make_shared<const Graph>(b));
  WlOptions o;
  o.k = k;
  o.mode = WlMode::kCounting;
  return run(l, r, o).verdict;
}

}  // namespace

TEST(Graph, BasicShapes) {
  Graph k4 = complete_graph(4);
  EXPECT_EQ(k4.num_edges(), 6u);
  EXPECT_EQ(path_graph(5).num_edges(), 4u);
  EXPECT_EQ(cycle_graph(5).min_degree(), 2u);
  EXPECT_EQ(prism_graph(3).num_vertices(), 6u);
  EXPECT_EQ(prism_graph(3).num_edges(), 9u);
  EXPECT_EQ(prism_graph(3).max_degree(), 3u);
}

TEST(Graph, AddEdgeRejectsBadInput) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_EQ(code_of([&] { g.add_edge(1, 0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { g.add_edge(2, 2); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { g.add_edge(0, 3); }), ErrorCode::kInvalidArgument);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(complete_graph(4)).num_edges(), 0u);
  Graph p = path_graph(5);
  EXPECT_EQ(complement(complement(p)), p);
}

TEST(Components, TwoDisjointEdges) {
  Graph g(4);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  auto cs = components(g);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0], (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(cs[1], (std::vector<Vertex>{1, 3}));
  EXPECT_FALSE(is_connected(g));
  Graph sub = induced_subgraph(g, {0, 2});
  EXPECT_EQ(sub.num_edges(), 1u);
}

TEST(CfiGadget, DegreeThree) {
  Graph g = cfi_gadget(3);
  EXPECT_EQ(g.num_vertices(), 10u);
  std::set<std::string> internal;
  for (Vertex v = 6; v < 10; ++v) {
    internal.insert(g.label(v));
    EXPECT_EQ(g.degree(v), 3u);
  }
  EXPECT_EQ(internal, (std::set<std::string>{"000", "011", "101", "110"}));
  // Half of the even strings have a given bit set.
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 2u);
  // Internal u touches a_i when bit i is 0, b_i otherwise.
  for (Vertex u = 6; u < 10; ++u)
    for (std::size_t i = 0; i < 3; ++i) {
      bool bit = g.label(u)[i] == '1';
      EXPECT_TRUE(g.adjacent(u, static_cast<Vertex>(2 * i + (bit ? 1 : 0))));
      EXPECT_FALSE(g.adjacent(u, static_cast<Vertex>(2 * i + (bit ? 0 : 1))));
    }
}

TEST(Cfi, K4Counts) {
  for (std::vector<Edge> twist : {std::vector<Edge>{}, std::vector<Edge>{{0, 1}}, std::vector<Edge>{{0, 1}, {2, 3}}}) {
    CfiGraph c = cfi(complete_graph(4), twist);
    EXPECT_EQ(c.graph.num_vertices(), 40u);
    EXPECT_EQ(c.graph.num_edges(), 60u);
    EXPECT_EQ(c.graph.min_degree(), 3u);
    EXPECT_EQ(c.graph.max_degree(), 3u);
    EXPECT_EQ(c.gadgets.size(), 4u);
  }
}

TEST(Cfi, PrismCounts) {
  CfiGraph c = cfi(prism_graph(3));
  EXPECT_EQ(c.graph.num_vertices(), 60u);
  EXPECT_EQ(c.graph.num_edges(), 90u);
}

TEST(Cfi, RejectsBadBases) {
  Graph two_triangles(6);
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}) two_triangles.add_edge(u, v);
  EXPECT_EQ(code_of([&] { cfi(two_triangles); }), ErrorCode::kDisconnected);
  EXPECT_EQ(code_of([] { cfi(path_graph(3)); }), ErrorCode::kDegreeTooLow);
  EXPECT_EQ(code_of([] { cfi(complete_graph(4), {{0, 0}}); }), ErrorCode::kInvalidArgument);
}

TEST(Cfi, TwistParityUnderCountingWl) {
  Graph plain = cfi(complete_graph(4)).graph;
  Graph odd = cfi(complete_graph(4), {{0, 1}}).graph;
  Graph even = cfi(complete_graph(4), {{0, 1}, {2, 3}}).graph;
  Verdict v = compare(plain, odd, 3);
  EXPECT_TRUE(v.distinguished);
  Verdict w = compare(plain, even, 3);
  EXPECT_FALSE(w.distinguished);
  EXPECT_TRUE(w.reached_stable);
}

TEST(GraphIo, RoundTripWithLabels) {
  Graph g = cfi_gadget(3);
  std::string text = to_text(g);
  std::istringstream in(text);
  Graph back = read_graph(in);
  EXPECT_EQ(back, g);
  EXPECT_EQ(back.label(6), g.label(6));
  EXPECT_EQ(to_text(back), text);
}

TEST(GraphIo, ParseErrors) {
  for (const char* bad : {"graph v1 n=3 m=2\n0 1\n", "graph v1 n=3 m=1\n0 1 2\n", "graph v2 n=1 m=0\n",
                          "graph v1 n=2 m=1\n0 1\nextra\n"}) {
    std::istringstream in(bad);
    EXPECT_EQ(code_of([&] { read_graph(in); }), ErrorCode::kParse) << bad;
  }
}

TEST(GraphDescriptors, Examples) {
  EXPECT_EQ(build_graph("cfi:k4").num_vertices(), 40u);
  EXPECT_EQ(build_graph("cfi:k4:twist=0-1").num_edges(), 60u);
  EXPECT_EQ(build_graph("cycle5").num_edges(), 5u);
  EXPECT_TRUE(is_graph_descriptor("prism3"));
  EXPECT_FALSE(is_graph_descriptor("S4"));
}
