#include <gtest/gtest.h>

#include <random>

#include "clttf/corpus.hpp"
#include "clttf/coxeter.hpp"

using namespace clttf;

namespace {

LabelledGraph single_edge(int m) { return parse_graph("edge a b " + std::to_string(m)); }

CWord random_word(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), pick(0, n - 1);
  CWord w(len(rng));
  for (auto& l : w) l = pick(rng);
  return w;
}

}  // namespace

TEST(Reduce, Examples) {
  auto p = corpus::named("path34");
  EXPECT_TRUE(reduce(p, parse_cword(p, "a a")).empty());
  auto e = single_edge(3);
  EXPECT_TRUE(reduce(e, parse_cword(e, "a b a b a b")).empty());
  EXPECT_EQ(reduce(e, parse_cword(e, "a b a")).size(), 3u);
}

TEST(NormalForm, Examples) {
  auto e = single_edge(3);
  EXPECT_EQ(normal_form(e, parse_cword(e, "b a b")).word(), parse_cword(e, "a b a"));
  EXPECT_TRUE(normal_form(e, {}).is_identity());
  auto p = corpus::named("path34");
  EXPECT_EQ(normal_form(p, parse_cword(p, "a c")).word(), parse_cword(p, "a c"));
  EXPECT_NE(normal_form(p, parse_cword(p, "c a")), normal_form(p, parse_cword(p, "a c")));
}

TEST(Reduce, OutputIsReducedAndNeverLonger) {
  std::mt19937 rng(21);
  auto g = corpus::named("pentagon");
  Coxeter W(g);
  for (int i = 0; i < 300; ++i) {
    CWord w = random_word(rng, g.n(), 12);
    CWord r = W.reduce(w);
    ASSERT_LE(r.size(), w.size());
    EXPECT_EQ(W.reduce(r), r);
    EXPECT_EQ(W.reduce_literal(w).size(), r.size());
  }
}

TEST(NormalForm, DependsOnlyOnFactors) {
  std::mt19937 rng(22);
  auto g = corpus::named("square_tail");
  Coxeter W(g);
  for (int i = 0; i < 1000; ++i) {
    CWord u = random_word(rng, g.n(), 8), v = random_word(rng, g.n(), 8);
    CWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    ASSERT_EQ(W.element(uv), W.product(W.element(u), W.element(v)));
  }
}

TEST(Ball, Cardinalities) {
  for (int m = 3; m <= 6; ++m) {
    auto b = ball(single_edge(m), m);
    EXPECT_EQ(static_cast<int>(b.size()), 2 * m);
    std::size_t prev = 0;
    for (int L = 0; L <= m; ++L) {
      auto s = ball(single_edge(m), L).size();
      EXPECT_GT(s, prev);
      prev = s;
    }
    EXPECT_EQ(ball(single_edge(m), m + 2).size(), static_cast<std::size_t>(2 * m));
  }
  auto g = corpus::named("cube");
  EXPECT_EQ(ball(g, 0).size(), 1u);
  EXPECT_EQ(ball(g, 1).size(), 1u + g.n());
}

TEST(GeometricOracle, Examples) {
  auto e = single_edge(3);
  EXPECT_TRUE(oracle_is_identity(geometric_oracle(e, parse_cword(e, "a a")), 1e-12));
  EXPECT_TRUE(oracle_is_identity(geometric_oracle(e, parse_cword(e, "a b a b a b")), 1e-9));
  EXPECT_FALSE(oracle_is_identity(geometric_oracle(e, parse_cword(e, "a b a")), 1e-6));
}

TEST(GeometricOracle, AgreesWithRewriting) {
  std::mt19937 rng(23);
  for (const auto& [name, g] : corpus::named_clttf()) {
    if (g.n() > 5) continue;
    Coxeter W(g);
    for (int i = 0; i < 200; ++i) {
      CWord w = random_word(rng, g.n(), 12);
      ASSERT_EQ(W.is_identity(w), oracle_is_identity(geometric_oracle(g, w), 1e-6)) << name;
    }
  }
}

TEST(VerifyHomomorphism, IdentityAndBadMaps) {
  auto g = single_edge(3);
  std::vector<CWord> id{{0}, {1}};
  EXPECT_TRUE(verify_homomorphism(g, g, id).ok);
  std::vector<CWord> bad{{1, 0}, {1}};
  auto r = verify_homomorphism(g, g, bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failing_relator, "a^2");
}

TEST(VerifyHomomorphism, DihedralTwistOnCutEdge) {
  auto g = corpus::named("path34");
  Coxeter W(g);
  // Conjugate {a} by (ab)^r for unit residues r of 3.
  for (int r : {0, 2}) {
    CWord c;
    for (int i = 0; i < r; ++i) c.insert(c.end(), {0, 1});
    CWord img = c;
    img.push_back(0);
    for (int l : cword_inverse(c)) img.push_back(l);
    EXPECT_TRUE(verify_homomorphism(g, W, {img, {1}, {2}}).ok) << r;
  }
}

TEST(Coxeter, OrbitCapIsEnforced) {
  auto g = corpus::named("cube");
  Coxeter W(g, 3);
  CWord w;
  for (int i = 0; i < 6; ++i) w.insert(w.end(), {0, 1});
  EXPECT_THROW(W.braid_orbit(std::string(w.begin(), w.end())), OrbitOverflow);
}
