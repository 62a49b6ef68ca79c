#include <gtest/gtest.h>

#include "clttf/corpus.hpp"
#include "clttf/decomposition.hpp"

using namespace clttf;

namespace {

std::vector<std::string> edge_names(const LabelledGraph& g, const std::vector<int>& ks) {
  std::vector<std::string> out;
  for (int k : ks) out.push_back(g.edge_name(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> vertex_names(const LabelledGraph& g, const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.name(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Separations, Path) {
  auto g = corpus::named("path34");
  auto s = separations(g);
  EXPECT_EQ(vertex_names(g, s.separating_vertices), std::vector<std::string>{"b"});
  EXPECT_TRUE(s.separating_edges.empty());
  EXPECT_EQ(s.cut_edges.size(), 2u);
  ASSERT_EQ(s.even_terminal_edges.size(), 1u);
  EXPECT_EQ(g.edge(s.even_terminal_edges[0]).m, 4);
}

TEST(Separations, DoubleSquare) {
  auto g = corpus::named("double_square");
  auto s = separations(g);
  EXPECT_TRUE(s.separating_vertices.empty());
  ASSERT_EQ(s.separating_edges.size(), 1u);
  EXPECT_EQ(vertex_names(g, {g.edge(s.separating_edges[0]).u, g.edge(s.separating_edges[0]).v}),
            (std::vector<std::string>{"a", "b"}));
}

TEST(Separations, StarEdgesAllSeparate) {
  auto g = corpus::named("star");
  auto s = separations(g);
  EXPECT_EQ(vertex_names(g, s.separating_vertices), std::vector<std::string>{"c"});
  EXPECT_EQ(s.separating_edges.size(), 3u);
}

TEST(Chunks, Examples) {
  auto ds = chunks(corpus::named("double_square"));
  EXPECT_EQ(ds.N, 2);
  EXPECT_EQ(ds.R, 1);
  for (const auto& c : ds.chunks) {
    EXPECT_TRUE(c.solid);
    EXPECT_EQ(c.vertices.size(), 4u);
  }
  auto p = chunks(corpus::named("path34"));
  EXPECT_EQ(p.N, 2);
  for (const auto& c : p.chunks) EXPECT_FALSE(c.solid);
  auto cube = chunks(corpus::named("cube"));
  EXPECT_EQ(cube.N, 1);
  EXPECT_EQ(cube.chunks[0].vertices.size(), 8u);
}

TEST(Chunks, SolidOrSingleEdgeAndRAtMostN) {
  for (const auto& g : corpus::labelled_connected(5, {3, 4})) {
    auto d = chunks(g);
    for (const auto& c : d.chunks) EXPECT_TRUE(c.solid || c.edges.size() == 1);
    // Two triangles sharing a vertex give R = 3 > N = 2; the bound needs triangle-freeness.
    if (validate(g).triangle_free) EXPECT_LE(d.R, d.N) << to_text(g);
    auto s = separations(g);
    bool all_even = s.separating_vertices.empty();
    for (int k : s.separating_edges) all_even = all_even && g.edge(k).m % 2 == 0;
    if (all_even) EXPECT_EQ(d.R, d.N) << to_text(g);
  }
}

// Edges shared by two chunks are exactly the separating edges they meet at.
TEST(Chunks, EdgesCoveredAndOverlapsOnlyOnSeparators) {
  for (const auto& g : corpus::labelled_connected(5, {3})) {
    auto d = chunks(g);
    auto s = separations(g);
    std::vector<int> cover(g.num_edges(), 0);
    for (const auto& c : d.chunks)
      for (int k : c.edges) ++cover[k];
    for (int k = 0; k < g.num_edges(); ++k) {
      EXPECT_GE(cover[k], 1);
      if (cover[k] > 1)
        EXPECT_TRUE(std::count(s.separating_edges.begin(), s.separating_edges.end(), k)) << to_text(g);
    }
  }
}

TEST(Chunks, MatchBruteForceOracleOnFiveVertexCorpus) {
  for (const auto& g : corpus::labelled_connected(5, {3, 4})) {
    auto d = chunks(g);
    std::vector<std::vector<int>> got;
    for (const auto& c : d.chunks) got.push_back(c.vertices);
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, corpus::brute_force_chunks(g)) << to_text(g);
  }
}

TEST(HatGraph, Examples) {
  auto p = hat_graph(corpus::named("path34"));
  EXPECT_EQ(p.n(), 3);
  auto sq = hat_graph(corpus::named("square"));
  EXPECT_EQ(sq.n(), 8);
  auto e = hat_graph(parse_graph("edge a b 3"));
  ASSERT_EQ(e.n(), 1);
  EXPECT_EQ(e.type[0], 'V');
}

TEST(Cnva, Examples) {
  auto g = corpus::named("path34");
  EXPECT_EQ(vertex_names(g, cnva_generators(g)), (std::vector<std::string>{"a", "b"}));
  auto star = corpus::named("star4");
  EXPECT_EQ(cnva_generators(star).size(), 5u);
  auto p44 = corpus::named("path44");
  EXPECT_EQ(vertex_names(p44, cnva_generators(p44)), std::vector<std::string>{"b"});
}

TEST(MinimalCircuits, Examples) {
  EXPECT_EQ(minimal_circuits(plain_of(corpus::named("square"))).size(), 1u);
  EXPECT_EQ(minimal_circuits(plain_of(corpus::named("k23"))).size(), 3u);
  // No 6-cycles exist in K_{2,3}; every simple cycle is one of the squares.
  EXPECT_EQ(simple_cycles(plain_of(corpus::named("k23")), 6).size(), 3u);
  EXPECT_TRUE(minimal_circuits(plain_of(corpus::named("star4"))).empty());
}

// Every minimal circuit of the subdivided graph lies in one solid chunk, and
// each solid chunk is the union of the circuits inside it.
TEST(MinimalCircuits, UnionOfCircuitsOverCorpus) {
  for (const auto& g : corpus::labelled_connected(5, {3}, true)) {
    if (!validate(g).clttf) continue;
    auto d = chunks(g);
    auto hat = hat_graph(g);
    std::vector<std::set<int>> covered(d.N);
    for (const auto& cyc : minimal_circuits(hat)) {
      std::set<int> es;
      for (int x : cyc)
        if (hat.type[x] == 'V') es.insert(hat.origin[x]);
      int homes = 0;
      for (int i = 0; i < d.N; ++i) {
        const auto& ce = d.chunks[i].edges;
        if (std::all_of(es.begin(), es.end(), [&](int k) { return std::count(ce.begin(), ce.end(), k); })) {
          ++homes;
          covered[i].insert(es.begin(), es.end());
        }
      }
      EXPECT_EQ(homes, 1) << to_text(g);
    }
    for (int i = 0; i < d.N; ++i)
      if (d.chunks[i].solid)
        EXPECT_EQ(covered[i], std::set<int>(d.chunks[i].edges.begin(), d.chunks[i].edges.end())) << to_text(g);
  }
}
