#include <gtest/gtest.h>

#include "clttf/autgen.hpp"
#include "clttf/corpus.hpp"

using namespace clttf;

namespace {

// phi applied to a word of its source.
AWord apply_map(const AutGenerator& a, const AWord& w) {
  AWord out;
  for (int l : w) {
    AWord x = a.image(avertex(l));
    if (l < 0) x = aword_inverse(x);
    out.insert(out.end(), x.begin(), x.end());
  }
  return free_reduce(out);
}

int count_kind(const std::vector<AutGenerator>& gs, GenKind k) {
  return static_cast<int>(std::count_if(gs.begin(), gs.end(), [&](const AutGenerator& a) { return a.kind == k; }));
}

}  // namespace

TEST(Words, FreeAndCyclicReduction) {
  AWord w{aletter(0), aletter(1), aletter(1, true), aletter(2)};
  EXPECT_EQ(free_reduce(w), (AWord{aletter(0), aletter(2)}));
  AWord c{aletter(0, true), aletter(1), aletter(0)};
  EXPECT_EQ(cyclic_reduce(c), AWord{aletter(1)});
  auto g = corpus::named("path34");
  EXPECT_EQ(parse_aword(g, aword_string(g, {aletter(0), aletter(2, true)})), (AWord{aletter(0), aletter(2, true)}));
}

TEST(Inversions, Examples) {
  auto p34 = inversion_generators(corpus::named("path34"));
  EXPECT_EQ(p34.size(), 2u);
  EXPECT_EQ(count_kind(p34, GenKind::GlobalInversion), 1);
  EXPECT_EQ(inversion_rank(corpus::named("cube")), 1);
  EXPECT_EQ(inversion_generators(corpus::named("path44")).size(), 3u);
}

TEST(Inversions, InvolutionsThatCommute) {
  for (const auto& [name, g] : corpus::named_clttf()) {
    auto inv = inversion_generators(g);
    for (const auto& a : inv)
      for (int v = 0; v < g.n(); ++v) {
        EXPECT_EQ(apply_map(a, apply_map(a, {aletter(v)})), AWord{aletter(v)}) << name;
        for (const auto& b : inv) EXPECT_EQ(apply_map(a, apply_map(b, {aletter(v)})), apply_map(b, apply_map(a, {aletter(v)}))) << name;
      }
  }
}

TEST(Centralizer, Examples) {
  auto p34 = corpus::named("path34");
  auto cb = centralizer_generators(p34, p34.vertex("b"));
  EXPECT_EQ(cb.rank, 2);
  ASSERT_EQ(cb.generators.size(), 2u);
  EXPECT_EQ(xword_string(p34, cb.generators[0]), "x(a-b) x(a-b)");
  EXPECT_EQ(xword_string(p34, cb.generators[1]), "x(b-c)");
  auto p44 = corpus::named("path44");
  auto ca = centralizer_generators(p44, p44.vertex("a"));
  EXPECT_EQ(ca.rank, 1);
  ASSERT_EQ(ca.generators.size(), 1u);
  EXPECT_EQ(xword_string(p44, ca.generators[0]), "x(a-b)");
}

TEST(Centralizer, RankIsArrowsMinusVerticesPlusOne) {
  for (const auto& [name, g] : corpus::named_clttf())
    for (int v = 0; v < g.n(); ++v) {
      auto c = centralizer_generators(g, v);
      EXPECT_EQ(c.rank, c.arrows - c.vertices + 1) << name;
      EXPECT_EQ(static_cast<int>(c.generators.size()), c.rank) << name;
    }
}

// Each centralizer word commutes with the vertex in the dihedral pieces it meets.
TEST(Centralizer, StarGeneratorsAreCentreWords) {
  auto g = corpus::named("star4");
  auto c = centralizer_generators(g, g.vertex("c"));
  EXPECT_EQ(c.rank, 4);
  for (const auto& w : c.generators) {
    ASSERT_EQ(w.size(), 2u);
    EXPECT_EQ(w[0].first, w[1].first);
  }
}

TEST(DehnTwists, Examples) {
  auto ds = corpus::named("double_square");
  auto d = dehn_twist_generators(ds);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].kind, GenKind::DehnTwistEdge);
  EXPECT_EQ(aword_string(ds, centre_word(ds, d[0].edge)), "a b a b a b");
  EXPECT_TRUE(dehn_twist_generators(corpus::named("cube")).empty());
  EXPECT_FALSE(dehn_twist_generators(corpus::named("star3")).empty());
}

TEST(DihedralTwists, Residues) {
  auto g = corpus::named("path34");
  auto cp = coxeter_pure_generators(g);
  std::vector<int> ab, bc;
  for (const auto& a : cp) (g.edge(a.edge).m == 3 ? ab : bc).push_back(a.residue);
  EXPECT_EQ(ab, (std::vector<int>{0, 2}));
  EXPECT_EQ(bc, (std::vector<int>{0, 1, 2, 3}));
}

TEST(Verification, AllGeneratorsOnNamedCorpus) {
  for (const auto& [name, g] : corpus::named_clttf()) {
    for (const auto& a : artin_generators(g)) {
      auto c = verify_artin(a);
      EXPECT_TRUE(c.homomorphism) << name << " " << kind_name(a.kind) << " " << c.failing_relator;
      EXPECT_TRUE(c.inverse_ok) << name << " " << kind_name(a.kind);
    }
    for (const auto& a : coxeter_generators(g)) {
      auto c = verify_coxeter(a);
      EXPECT_TRUE(c.homomorphism) << name << " " << kind_name(a.kind) << " " << c.failing_relator;
      EXPECT_TRUE(c.inverse_ok) << name << " " << kind_name(a.kind);
    }
  }
}

// A map that breaks a braid relation is caught.
TEST(Verification, RejectsBrokenMap) {
  auto g = corpus::named("path34");
  auto a = inner_generator(g, 0);
  a.action.core[1] = {aletter(2)};
  EXPECT_FALSE(verify_artin(a).homomorphism);
  EXPECT_FALSE(verify_coxeter(a).homomorphism);
}

TEST(InducedPermutation, Examples) {
  auto p33 = parse_graph("edge a b 3\nedge b c 3");
  auto autos = graph_auto_generators(p33);
  ASSERT_EQ(autos.size(), 1u);
  Perm swap = induced_edge_permutation({autos[0]});
  EXPECT_EQ(swap, (Perm{1, 0}));
  auto ds = corpus::named("double_square");
  EXPECT_TRUE(perm_is_identity(induced_edge_permutation({dehn_twist_generators(ds)[0]})));
  for (const auto& [name, g] : corpus::named_clttf())
    for (const auto& t : edge_twist_generators(g)) {
      auto back = edge_twist_generators(t.target);
      for (const auto& r : back)
        if (r.edge == t.edge && r.side == t.side) EXPECT_TRUE(perm_is_identity(induced_edge_permutation({t, r}))) << name;
    }
}

TEST(InducedPermutation, PureAndInversionLoopsAreTrivial) {
  for (const auto& [name, g] : corpus::named_clttf()) {
    for (const auto& a : artin_generators(g))
      if (a.kind != GenKind::GraphAuto && a.kind != GenKind::EdgeTwist)
        EXPECT_TRUE(perm_is_identity(induced_edge_permutation({a}))) << name << " " << kind_name(a.kind);
  }
}

TEST(StructureReport, Examples) {
  auto cube = structure_report(corpus::named("cube"));
  EXPECT_EQ(cube.graph_aut_order, 48u);
  EXPECT_TRUE(cube.vertex_rigid);
  EXPECT_EQ(cube.inv_rank, 1);
  auto ds = structure_report(corpus::named("double_square"));
  EXPECT_EQ(ds.N, 2);
  EXPECT_EQ(ds.R, 1);
  EXPECT_NE(std::find(ds.facts.begin(), ds.facts.end(), "Pure = G x| Z^1"), ds.facts.end());
  EXPECT_NE(std::find(ds.facts.begin(), ds.facts.end(), "Pure_W = W x| (Z/2)^0"), ds.facts.end());
  auto p = structure_report(corpus::named("path34"));
  for (const auto& f : p.facts) EXPECT_NE(f.rfind("Pure", 0), 0u) << f;
}

// Chains and books of squares have no separating vertices, and their edge
// Dehn twists fixing a base chunk commute.
TEST(DehnTwistCommutation, CommuteWithoutSeparatingVertices) {
  const char* ladder =
      "edge a b 3\nedge b c 3\nedge c d 3\nedge d a 3\nedge c e 3\nedge e f 3\nedge f d 3\n"
      "edge e g 3\nedge g h 3\nedge h f 3\n";
  const char* book =
      "edge a b 3\nedge b c 3\nedge c d 3\nedge d a 3\nedge b e 4\nedge e f 3\nedge f a 4\n"
      "edge b g 3\nedge g h 5\nedge h a 3\n";
  for (const char* text : {ladder, book}) {
    auto r = dehn_twist_commutation(parse_graph(text));
    EXPECT_TRUE(r.applies);
    EXPECT_EQ(r.twists, 2);
    EXPECT_EQ(r.pairs, 1);
    EXPECT_EQ(r.commuting, 1);
    EXPECT_TRUE(r.unresolved.empty());
  }
}

TEST(DehnTwistCommutation, SeparatingVerticesAreFlagged) {
  auto r = dehn_twist_commutation(corpus::named("star"));
  EXPECT_FALSE(r.applies);
  EXPECT_EQ(r.twists, 3);
  EXPECT_EQ(r.commuting + static_cast<int>(r.unresolved.size()), r.pairs);
}
