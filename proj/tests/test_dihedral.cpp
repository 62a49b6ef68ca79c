#include <gtest/gtest.h>

#include <random>

#include "clttf/dihedral.hpp"

using namespace clttf;

namespace {

DWord random_word(std::mt19937& rng, int max_len) {
  static const DLetter letters[4] = {1, 2, -1, -2};
  std::uniform_int_distribution<int> len(0, max_len), pick(0, 3);
  DWord w(len(rng));
  for (auto& l : w) l = letters[pick(rng)];
  return w;
}

DWord cat(std::initializer_list<DWord> parts) {
  DWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

TEST(DihedralNormalForm, OddBalancedWordIsTrivial) {
  EXPECT_TRUE(dihedral_normal_form(3, parse_dword("s t s T S T")).is_identity());
}

TEST(DihedralNormalForm, QuasiCentreSwapsGeneratorsForOddLabels) {
  for (int m : {3, 5, 7}) {
    DWord x = dihedral_prod(1, m);
    auto conj = dihedral_normal_form(m, cat({x, {1}, dword_inverse(x)}));
    EXPECT_EQ(conj, DihedralElement::generator(m, 2)) << m;
  }
  for (int m : {4, 6}) {
    DWord x = dihedral_prod(1, m);
    EXPECT_EQ(dihedral_normal_form(m, cat({x, {1}, dword_inverse(x)})), DihedralElement::generator(m, 1));
  }
}

TEST(DihedralNormalForm, CentreIsCentral) {
  std::mt19937 rng(11);
  for (int m = 2; m <= 6; ++m) {
    auto z = dihedral_normal_form(m, special_elements(m).z_word);
    EXPECT_TRUE(z.gamma_form().empty());
    EXPECT_EQ(z.length(), m % 2 ? 2 * m : m);
    for (int i = 0; i < 50; ++i) {
      auto g = dihedral_normal_form(m, random_word(rng, 8));
      EXPECT_EQ(z * g, g * z);
    }
  }
}

TEST(DihedralNormalForm, BraidRelationHolds) {
  for (int m = 2; m <= 8; ++m)
    EXPECT_EQ(dihedral_normal_form(m, dihedral_prod(1, m)), dihedral_normal_form(m, dihedral_prod(2, m))) << m;
  EXPECT_NE(dihedral_normal_form(3, dihedral_prod(1, 2)), dihedral_normal_form(3, dihedral_prod(2, 2)));
}

TEST(DihedralNormalForm, HomomorphismOnRandomPairs) {
  std::mt19937 rng(12);
  for (int i = 0; i < 1000; ++i) {
    int m = 3 + i % 4;
    DWord u = random_word(rng, 12), v = random_word(rng, 12);
    auto nu = dihedral_normal_form(m, u), nv = dihedral_normal_form(m, v);
    ASSERT_EQ(dihedral_normal_form(m, cat({u, v})), nu * nv);
    ASSERT_EQ(dihedral_normal_form(m, dword_inverse(u)), nu.inverse());
    ASSERT_TRUE((nu * nu.inverse()).is_identity());
  }
}

// Anything with nontrivial Coxeter projection or nonzero exponent sum is not the identity.
TEST(DihedralNormalForm, NecessaryConditions) {
  std::mt19937 rng(13);
  for (int i = 0; i < 2000; ++i) {
    int m = 3 + i % 4;
    DWord w = random_word(rng, 10);
    long long sum = 0;
    for (DLetter l : w) sum += l > 0 ? 1 : -1;
    auto g = dihedral_normal_form(m, w);
    EXPECT_EQ(g.length(), sum);
    if (g.is_identity()) EXPECT_TRUE(cox_dihedral(m, w).is_identity());
  }
}

// Bounded exhaustive check: x^k = s^k forces x = s.
TEST(DihedralNormalForm, UniqueRootsOfGeneratorPowers) {
  for (int m : {3, 4}) {
    auto s = DihedralElement::generator(m, 1);
    std::vector<DWord> frontier{{}};
    for (int len = 0; len <= 6; ++len) {
      std::vector<DWord> next;
      for (const auto& w : frontier) {
        auto x = dihedral_normal_form(m, w);
        for (int k : {2, 3})
          if (x.pow(k) == s.pow(k)) ASSERT_EQ(x, s) << dword_string(w);
        if (len < 6)
          for (DLetter l : {1, 2, -1, -2})
            if (w.empty() || w.back() != -l) {
              DWord y = w;
              y.push_back(l);
              next.push_back(y);
            }
      }
      frontier.swap(next);
    }
  }
}

TEST(IsInCyclic, Examples) {
  const int m = 3;
  auto s = DihedralElement::generator(m, 1);
  EXPECT_EQ(is_in_cyclic(m, s.pow(5), s), 5);
  EXPECT_FALSE(is_in_cyclic(m, dihedral_normal_form(m, special_elements(m).z_word), s).has_value());
  EXPECT_FALSE(is_in_cyclic(m, DihedralElement::generator(m, 2), s).has_value());
  EXPECT_THROW(is_in_cyclic(m, s, s.pow(2)), std::invalid_argument);
}

TEST(SpecialElements, Examples) {
  auto e3 = special_elements(3);
  EXPECT_EQ(e3.k, 3);
  EXPECT_EQ(e3.x_word, parse_dword("sts"));
  EXPECT_TRUE(e3.z_matches_x);
  auto e4 = special_elements(4);
  EXPECT_EQ(e4.k, 2);
  EXPECT_TRUE(e4.z_matches_x);
  auto e2 = special_elements(2);
  EXPECT_EQ(e2.k, 1);
  EXPECT_EQ(e2.x_word, parse_dword("st"));
}

TEST(UnitResidues, Examples) {
  EXPECT_EQ(unit_residues(5), (std::vector<int>{0, 1, 3, 4}));
  EXPECT_EQ(unit_residues(4), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(unit_residues(3), (std::vector<int>{0, 2}));
  EXPECT_THROW(unit_residues(2), std::invalid_argument);
}

TEST(CoxDihedral, Examples) {
  EXPECT_TRUE(cox_dihedral(3, parse_dword("ststst")).is_identity());
  EXPECT_TRUE(cox_dihedral(5, parse_dword("ss")).is_identity());
  EXPECT_EQ(cox_dihedral(4, parse_dword("stst")), cox_dihedral(4, parse_dword("tsts")));
  EXPECT_FALSE(cox_dihedral(4, parse_dword("st")).is_identity());
}

TEST(ParseDword, Forms) {
  EXPECT_EQ(parse_dword("s t^-1 S"), (DWord{1, -2, -1}));
  EXPECT_EQ(parse_dword("stST"), (DWord{1, 2, -1, -2}));
  EXPECT_THROW(parse_dword("x"), std::invalid_argument);
}
