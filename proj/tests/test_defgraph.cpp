#include <gtest/gtest.h>

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "clttf/corpus.hpp"
#include "clttf/defgraph.hpp"

using namespace clttf;

TEST(Parse, PathWithTwoLabels) {
  auto g = parse_graph("edge a b 3\nedge b c 4");
  ASSERT_EQ(g.n(), 3);
  EXPECT_EQ(g.names(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(g.label(g.vertex("a"), g.vertex("b")), 3);
  EXPECT_EQ(g.label(g.vertex("b"), g.vertex("c")), 4);
  EXPECT_EQ(g.label(g.vertex("a"), g.vertex("c")), 0);
}

TEST(Parse, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph("edge a a 3"), GraphError);
  EXPECT_THROW(parse_graph("edge a b 1"), GraphError);
  EXPECT_THROW(parse_graph("edge a b 3\nedge b a 4"), GraphError);
  EXPECT_THROW(parse_graph("edge a b"), GraphError);
  EXPECT_THROW(parse_graph("node a"), GraphError);
  EXPECT_THROW(parse_graph("edge a b x"), GraphError);
}

TEST(Parse, CommentsAndIsolatedVertices) {
  auto g = parse_graph("# header\nvertex z\nedge a b 3 # trailing\n");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.name(0), "z");
  EXPECT_EQ(g.num_edges(), 1);
}

TEST(Parse, RoundTripThroughText) {
  for (const auto& ng : corpus::named_graphs()) {
    auto g = parse_graph(ng.text);
    EXPECT_EQ(parse_graph(to_text(g)), g) << ng.name;
  }
}

TEST(Validate, PathIsClttf) {
  auto r = validate(corpus::named("path34"));
  EXPECT_TRUE(r.clttf);
  EXPECT_TRUE(r.two_dimensional);
  EXPECT_FALSE(r.offending_witness.has_value());
}

TEST(Validate, TriangleIsRejectedWithWitness) {
  auto r = validate(corpus::named("triangle"));
  EXPECT_FALSE(r.clttf);
  EXPECT_FALSE(r.triangle_free);
  EXPECT_TRUE(r.two_dimensional);
  EXPECT_FALSE(r.hyperbolic_type);
  ASSERT_TRUE(r.offending_witness.has_value());
  EXPECT_EQ(r.offending_witness->kind, "triangle");
}

TEST(Validate, SquareOfCommutingPairs) {
  auto r = validate(parse_graph("edge a b 2\nedge b c 2\nedge c d 2\nedge d a 2"));
  EXPECT_FALSE(r.large_type);
  EXPECT_FALSE(r.hyperbolic_type);
}

TEST(Validate, LargeTypeTriangleFreeImpliesTwoDimensional) {
  for (const auto& g : corpus::labelled_connected(5, {2, 3}))
    if (validate(g).clttf) EXPECT_TRUE(validate(g).two_dimensional);
}

TEST(Isomorphism, PathReversal) {
  auto a = parse_graph("edge a b 3\nedge b c 4");
  auto b = parse_graph("edge a b 4\nedge b c 3");
  auto f = are_isomorphic(a, b);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(f->preserves_labels);
  EXPECT_EQ(f->vertex_map[a.vertex("a")], b.vertex("c"));
}

TEST(Isomorphism, DistinctLabelsOrShapes) {
  EXPECT_FALSE(are_isomorphic(parse_graph("edge a b 3\nedge b c 4"), parse_graph("edge a b 3\nedge b c 3")));
  auto star = parse_graph("edge c a 3\nedge c b 3\nedge c d 4");
  auto path = parse_graph("edge a b 3\nedge b c 3\nedge c d 4");
  EXPECT_FALSE(are_isomorphic(star, path));
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  std::mt19937 rng(7);
  for (const auto& ng : corpus::named_graphs()) {
    auto g = parse_graph(ng.text);
    std::vector<int> p(g.n());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<std::string> names(g.n());
    for (int v = 0; v < g.n(); ++v) names[p[v]] = g.name(v);
    std::vector<Edge> es;
    for (const auto& e : g.edges()) es.push_back({p[e.u], p[e.v], e.m});
    LabelledGraph h(names, es);
    EXPECT_EQ(canonical_form(g), canonical_form(h)) << ng.name;
  }
}

// Cross-check canonical_form against isomorphism search on small graphs.
TEST(CanonicalForm, InjectiveOnSmallCorpus) {
  auto all = corpus::labelled_connected(4, {3, 4});
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      bool same = canonical_form(all[i]) == canonical_form(all[j]);
      ASSERT_FALSE(same);
      if (all[i].n() == all[j].n()) {
        std::vector<int> p(all[i].n());
        std::iota(p.begin(), p.end(), 0);
        bool iso = false;
        do iso = iso || preserves_labels(all[i], all[j], p);
        while (std::next_permutation(p.begin(), p.end()));
        EXPECT_FALSE(iso);
      }
    }
}

TEST(Automorphisms, OrdersMatchBruteForce) {
  EXPECT_EQ(automorphism_group(parse_graph("edge a b 3\nedge b c 3")).order, 2u);
  EXPECT_EQ(automorphism_group(parse_graph("edge a b 3\nedge b c 4")).order, 1u);
  EXPECT_EQ(automorphism_group(corpus::named("cube")).order, 48u);
  for (const auto& ng : corpus::named_graphs()) {
    auto g = parse_graph(ng.text);
    if (g.n() > 7) continue;
    EXPECT_EQ(automorphism_group(g).order, corpus::brute_force_automorphism_count(g)) << ng.name;
  }
}

TEST(Automorphisms, GeneratorsGenerateTheGroup) {
  for (const auto& ng : corpus::named_graphs()) {
    auto g = parse_graph(ng.text);
    auto grp = automorphism_group(g);
    std::vector<Perm> gens;
    for (const auto& b : grp.generators) {
      EXPECT_TRUE(b.preserves_labels);
      gens.push_back(b.vertex_map);
    }
    EXPECT_EQ(perm_closure(g.n(), gens).size(), grp.order) << ng.name;
  }
}

TEST(VertexRigidity, Examples) {
  EXPECT_TRUE(is_vertex_rigid(corpus::named("cube")).rigid);
  EXPECT_TRUE(is_vertex_rigid(corpus::named("path34")).rigid);
  auto star = parse_graph("edge a c 3\nedge b c 3\nedge c d 4");
  auto r = is_vertex_rigid(star);
  EXPECT_FALSE(r.rigid);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->first, star.vertex("d"));
}

// Direct evaluation of the definition over the full automorphism list.
TEST(VertexRigidity, AgreesWithDefinition) {
  for (const auto& g : corpus::labelled_connected(5, {3, 4})) {
    bool rigid = true;
    for (const auto& p : all_automorphisms(g)) {
      if (perm_is_identity(p)) continue;
      for (int v = 0; v < g.n(); ++v) {
        bool fixed = p[v] == v;
        for (int w : g.neighbours(v)) fixed = fixed && p[w] == w;
        if (fixed) rigid = false;
      }
    }
    ASSERT_EQ(is_vertex_rigid(g).rigid, rigid) << to_text(g);
  }
}

TEST(DataFiles, MatchTheBuiltInCorpus) {
  for (const auto& ng : corpus::named_graphs()) {
    std::ifstream in(std::string(CLTTF_DATA_DIR) + "/" + ng.name + ".graph");
    ASSERT_TRUE(in) << ng.name;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), ng.text) << ng.name;
  }
}
