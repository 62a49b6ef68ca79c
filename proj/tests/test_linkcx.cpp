#include <gtest/gtest.h>

#include "clttf/corpus.hpp"
#include "clttf/linkcx.hpp"

using namespace clttf;

TEST(FundamentalRegion, Counts) {
  auto k = build_K(corpus::named("path34"));
  EXPECT_EQ(k.names.size(), 6u);
  EXPECT_EQ(k.squares.size(), 2u);
  auto e = build_K(parse_graph("edge a b 3"));
  EXPECT_EQ(e.names.size(), 4u);
  auto cube = corpus::named("cube");
  auto kc = build_K(cube);
  EXPECT_EQ(kc.names.size(), 21u);
  EXPECT_EQ(kc.squares.size(), 12u);
  EXPECT_TRUE(are_isomorphic(kc.base_link(cube), cube).has_value());
}

TEST(LinkBall, SmallRadius) {
  auto b = link_ball(3, 1, 2);
  // E plus s^jE and t^jE for 0 < |j| <= 2.
  EXPECT_EQ(b.edges.size(), 9u);
  EXPECT_EQ(b.incident[b.base_s()].size(), 5u);
  EXPECT_EQ(b.incident[b.base_t()].size(), 5u);
  EXPECT_EQ(girth_through_base(b), -1);
}

TEST(LinkBall, CosetKeysAgreeWithCyclicMembership) {
  auto b = link_ball(4, 4, 2);
  for (int i = 0; i < static_cast<int>(b.edges.size()); ++i)
    for (int j = i + 1; j < std::min<int>(b.edges.size(), 60); ++j) {
      auto h = b.edges[i].inverse() * b.edges[j];
      bool same_s = is_in_cyclic(4, h, DihedralElement::generator(4, 1)).has_value();
      EXPECT_EQ(same_s, b.ends[i].first == b.ends[j].first);
    }
}

TEST(LinkGirth, IsTwiceTheLabel) {
  for (int m : {3, 4, 5}) {
    auto b = link_ball(m, 2 * m);
    EXPECT_EQ(girth_through_base(b), 2 * m);
    for (int len = 3; len < 2 * m; ++len) EXPECT_TRUE(circuits_through_base(b, len).empty());
  }
}

TEST(BalancedWords, AreRelations) {
  for (int m = 3; m <= 7; ++m)
    for (int f : {0, 1})
      for (int n : {-3, -2, -1, 1, 2, 3}) EXPECT_TRUE(syllable_value(m, balanced_word(m, f, n)).is_identity());
}

TEST(Classify, Examples) {
  SyllableWord w3{{1, 1}, {2, 1}, {1, 1}, {2, -1}, {1, -1}, {2, -1}};
  auto c3 = classify_circuit(3, w3);
  ASSERT_TRUE(c3.matched);
  EXPECT_EQ(c3.family, 0);
  EXPECT_EQ(c3.n, 1);
  // s^2 t s t (t s t s^2)^-1
  SyllableWord w4{{1, 2}, {2, 1}, {1, 1}, {2, 1}, {1, -2}, {2, -1}, {1, -1}, {2, -1}};
  auto c4 = classify_circuit(4, w4);
  ASSERT_TRUE(c4.matched);
  EXPECT_EQ(c4.family, 0);
  EXPECT_EQ(c4.n, 2);
  EXPECT_FALSE(classify_circuit(3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 1}, {2, 1}}).matched);
}

TEST(Classify, EveryMinimalCircuitMatches) {
  for (int m : {3, 4}) {
    auto cl = classify_min_circuits(link_ball(m, 2 * m));
    EXPECT_FALSE(cl.circuits.empty());
    EXPECT_EQ(cl.unmatched, 0);
  }
}

TEST(Rigidity, PairBoundAndSubwordCounts) {
  auto rc = rigidity_counts(link_ball(3, 6));
  for (auto [k, c] : rc.pair)
    if (k > 1 || k < -1) EXPECT_LE(c, 2);
  EXPECT_EQ(rc.subword_st, 2);
  EXPECT_EQ(rc.subword_stinv, 1);
  // Read as consecutive link edges, the two triples trade places.
  EXPECT_EQ(rc.triple_t, 1);
  EXPECT_EQ(rc.triple_tinv, 2);
}

TEST(ThetaW, ContainsFundamentalSubgraph) {
  auto g = corpus::named("double_square");
  auto t = theta_w_ball(g, 4);
  for (int k = 0; k < g.num_edges(); ++k) EXPECT_TRUE(t.index.count(ThetaWBall::v_key(k, CoxeterElement{})));
  for (int v = 0; v < g.n(); ++v) {
    Coxeter W(g);
    EXPECT_TRUE(t.index.count(ThetaWBall::f_key(W.generator(v))));
  }
}

TEST(ThetaW, ExcludesNonCnvaReflections) {
  auto g = corpus::named("path34");
  auto t = theta_w_ball(g, 3);
  Coxeter W(g);
  EXPECT_TRUE(t.index.count(ThetaWBall::f_key(W.generator(g.vertex("a")))));
  EXPECT_TRUE(t.index.count(ThetaWBall::f_key(W.generator(g.vertex("b")))));
  EXPECT_FALSE(t.index.count(ThetaWBall::f_key(W.generator(g.vertex("c")))));
}

TEST(ThetaW, VVerticesAreShortCosets) {
  auto g = corpus::named("square");
  auto t = theta_w_ball(g, 2);
  Coxeter W(g);
  std::set<std::string> want;
  for (const auto& w : W.ball(2))
    for (int k = 0; k < g.num_edges(); ++k) want.insert(ThetaWBall::v_key(k, detail::min_coset_rep(W, w, g.edge(k))));
  std::set<std::string> got;
  for (int v = 0; v < t.graph.n(); ++v)
    if (t.graph.type[v] == 'V') got.insert(t.graph.names[v]);
  EXPECT_EQ(got, want);
}

TEST(ThetaW, BipartiteAndReflectionsFixTheirCosets) {
  auto g = corpus::named("double_square");
  auto t = theta_w_ball(g, 4);
  Coxeter W(g);
  for (int v = 0; v < t.graph.n(); ++v)
    for (int y : t.graph.adj[v]) {
      ASSERT_NE(t.graph.type[v], t.graph.type[y]);
      if (t.graph.type[v] != 'V') continue;
      const Edge& e = g.edge(t.graph.origin[v]);
      auto rw = W.product(t.element[y], t.element[v]);
      EXPECT_EQ(detail::min_coset_rep(W, rw, e), t.element[v]);
    }
}

TEST(MinimalBasic, DoubleSquareHasNoCounterexamples) {
  auto t = theta_w_ball(corpus::named("double_square"), 6);
  auto rep = verify_minimal_equals_basic(t, 8);
  EXPECT_GT(rep.isometric, 0);
  EXPECT_EQ(rep.counterexamples, 0);
}

TEST(MinimalBasic, SquareCircuitsAreTranslates) {
  auto t = theta_w_ball(corpus::named("square"), 6);
  auto rep = verify_minimal_equals_basic(t, 8);
  EXPECT_GT(rep.isometric, 0);
  for (const auto& c : rep.circuits)
    if (c.isometric) {
      ASSERT_TRUE(c.basic.has_value());
      EXPECT_EQ(c.basic->hat_cycle.size(), 8u);
    }
}

TEST(MinimalBasic, TreeHasNoCircuits) {
  auto t = theta_w_ball(corpus::named("path34"), 6);
  EXPECT_TRUE(verify_minimal_equals_basic(t, 8).circuits.empty());
}

TEST(IdentifyBasic, FundamentalCircuitHasIdentityWitness) {
  auto g = corpus::named("square");
  auto t = theta_w_ball(g, 4);
  auto hat = hat_graph(g);
  auto cyc = minimal_circuits(hat);
  ASSERT_EQ(cyc.size(), 1u);
  Coxeter W(g);
  std::vector<int> circuit;
  for (int x : cyc[0])
    circuit.push_back(hat.type[x] == 'V' ? t.index.at(ThetaWBall::v_key(hat.origin[x], CoxeterElement{}))
                                         : t.index.at(ThetaWBall::f_key(W.generator(hat.origin[x]))));
  auto b = identify_basic(t, circuit);
  ASSERT_TRUE(b.has_value());
  EXPECT_TRUE(b->minimal_in_hat);
  int first_v = t.graph.type[circuit[0]] == 'V' ? circuit[0] : circuit[1];
  EXPECT_TRUE(detail::in_parabolic(b->w, g.edge(t.graph.origin[first_v])));
}

TEST(IdentifyBasic, OuterCircuitOfDoubleSquareIsNotBasic) {
  auto g = corpus::named("double_square");
  auto t = theta_w_ball(g, 4);
  auto hat = hat_graph(g);
  Coxeter W(g);
  for (const auto& cyc : simple_cycles(hat, 12)) {
    std::vector<int> circuit;
    for (int x : cyc)
      circuit.push_back(hat.type[x] == 'V' ? t.index.at(ThetaWBall::v_key(hat.origin[x], CoxeterElement{}))
                                           : t.index.at(ThetaWBall::f_key(W.generator(hat.origin[x]))));
    auto b = identify_basic(t, circuit);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(b->minimal_in_hat, cyc.size() == 8u);
  }
}

TEST(ChunkEquivalence, DifferentSquaresAreInequivalent) {
  auto t = theta_w_ball(corpus::named("double_square"), 6);
  auto rep = verify_minimal_equals_basic(t, 8);
  auto eq = compare_chunk_equivalence(t, rep, 4);
  EXPECT_EQ(eq.disagree, 0);
  std::vector<std::vector<int>> cs;
  for (const auto& c : rep.circuits)
    if (c.isometric) cs.push_back(c.vertices);
  CircuitEquivalence ce(t, cs);
  for (int i = 0; i < ce.size(); ++i) EXPECT_TRUE(ce.equivalent(i, i, 0));
}

TEST(ChunkEquivalence, TranslatesWithinOneChunkAreEquivalent) {
  auto t = theta_w_ball(corpus::named("k23"), 6);
  auto rep = verify_minimal_equals_basic(t, 8);
  auto eq = compare_chunk_equivalence(t, rep, 4);
  EXPECT_GT(eq.equivalent_pairs, 0);
  EXPECT_EQ(eq.disagree, 0);
}

TEST(ThetaDot, ShapesAndColours) {
  auto t = theta_w_ball(corpus::named("square"), 3);
  auto rep = verify_minimal_equals_basic(t, 8);
  auto dot = theta_dot(t, rep);
  EXPECT_NE(dot.find("shape=box"), std::string::npos);
  EXPECT_NE(dot.find("shape=ellipse"), std::string::npos);
  EXPECT_EQ(dot.rfind("graph theta {", 0), 0u);
}
