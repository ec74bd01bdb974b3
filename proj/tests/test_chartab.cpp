#include <gtest/gtest.h>

#include <complex>

#include "support.hpp"

using namespace wittlab;
using wittlab::test::corpus_group;

namespace {

std::vector<FiniteGroup> all_corpus_groups() {
  std::vector<FiniteGroup> out;
  for (const auto& p : wittlab::test::corpus_files()) out.push_back(load_group(p));
  return out;
}

}  // namespace

TEST(CharacterTable, OrthogonalityModP) {
  for (const auto& g : all_corpus_groups()) {
    auto t = burnside_dixon(g);
    auto f = t.field();
    const auto& cc = t.classes;
    std::size_t sum_d2 = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      sum_d2 += std::size_t{t.degrees[i]} * t.degrees[i];
      EXPECT_EQ(g.order() % t.degrees[i], 0u) << g.name();
      for (std::size_t j = 0; j < t.size(); ++j) {
        modp::u64 s = 0;
        for (std::size_t k = 0; k < cc.count(); ++k)
          s = f.add(s, f.mul(cc.sizes[k] % t.p, f.mul(t.values[i][k], t.values[j][cc.inverse_class[k]])));
        EXPECT_EQ(s, i == j ? g.order() % t.p : 0u) << g.name() << " rows " << i << "," << j;
      }
    }
    EXPECT_EQ(sum_d2, g.order()) << g.name();
    EXPECT_EQ(t.size(), cc.count());
  }
}

TEST(CharacterTable, ColumnOrthogonalityOfLiftedValues) {
  for (const char* file : {"d8.grp", "q8.grp", "f21.grp", "heis27.grp", "g16_3.grp"}) {
    auto g = corpus_group(file);
    auto t = character_table(g);
    const auto& cc = t.modp.classes;
    for (std::size_t k = 0; k < cc.count(); ++k)
      for (std::size_t l = 0; l < cc.count(); ++l) {
        std::complex<double> s = 0;
        for (std::size_t i = 0; i < t.size(); ++i) s += t.values[i][k].to_complex() * std::conj(t.values[i][l].to_complex());
        double expected = k == l ? static_cast<double>(g.order()) / cc.sizes[k] : 0.0;
        EXPECT_NEAR(s.real(), expected, 1e-9) << file;
        EXPECT_NEAR(s.imag(), 0.0, 1e-9) << file;
      }
  }
}

// nu_2(chi) = |G|^-1 sum_g chi(g^2), evaluated in C from the lifted values.
TEST(CharacterTable, IndicatorMatchesBruteForceForSmallGroups) {
  std::size_t checked = 0;
  for (const auto& g : all_corpus_groups()) {
    if (g.order() > 16) continue;
    auto t = character_table(g);
    auto fs = fs_indicators(t.modp);
    const auto& cc = t.modp.classes;
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::complex<double> s = 0;
      for (Elem x = 0; x < g.order(); ++x) s += t.values[i][cc.class_of[g.mul(x, x)]].to_complex();
      s /= static_cast<double>(g.order());
      EXPECT_NEAR(s.imag(), 0.0, 1e-9);
      EXPECT_NEAR(s.real(), fs[i], 1e-9) << g.name() << " chi" << i + 1;
      ++checked;
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(CharacterTable, D8TensorSquareOfTheTwoDimensional) {
  // chi5 (x) chi5 = chi1 + chi2 + chi3 + chi4, read off the explicit table
  auto g = corpus_group("d8.grp");
  auto t = burnside_dixon(g);
  auto n = fusion_coefficients(t);
  ASSERT_EQ(t.degrees, (std::vector<unsigned>{1, 1, 1, 1, 2}));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(n(4, 4, k), 1);
  EXPECT_EQ(n(4, 4, 4), 0);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(n(i, 4, 4), 1);
}

TEST(CharacterTable, FusionAssociativity) {
  for (const auto& g : all_corpus_groups()) {
    if (g.order() > 32) continue;
    auto t = burnside_dixon(g);
    auto n = fusion_coefficients(t);
    const std::size_t r = t.size();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
          for (std::size_t m = 0; m < r; ++m) {
            std::int64_t left = 0, right = 0;
            for (std::size_t x = 0; x < r; ++x) {
              left += n(i, j, x) * n(x, k, m);
              right += n(j, k, x) * n(i, x, m);
            }
            ASSERT_EQ(left, right) << g.name();
          }
  }
}

TEST(CharacterTable, KnownIndicators) {
  EXPECT_EQ(fs_indicators(burnside_dixon(corpus_group("d8.grp"))), (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_EQ(fs_indicators(burnside_dixon(corpus_group("q8.grp"))), (std::vector<int>{1, 1, 1, 1, -1}));
  auto z3 = fs_indicators(burnside_dixon(cyclic_group(3)));
  EXPECT_EQ(z3, (std::vector<int>{1, 0, 0}));
}

TEST(CharacterTable, DualInvolution) {
  auto t = burnside_dixon(corpus_group("f21.grp"));
  auto d = dual_involution(t);
  std::size_t self_dual = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_EQ(d[d[i]], i);
    self_dual += d[i] == i;
  }
  EXPECT_EQ(self_dual, 1u);
}

TEST(Cyclotomic, DisplayForms) {
  auto t = character_table(corpus_group("ab8.grp"));
  bool saw_root = false;
  for (const auto& row : t.values)
    for (const auto& v : row) saw_root |= v.to_string().find("ζ8") != std::string::npos;
  EXPECT_TRUE(saw_root);
  auto q = character_table(corpus_group("q8.grp"));
  EXPECT_EQ(q.values[4][0].to_string(), "2");
  EXPECT_EQ(q.values[4][1].to_string(), "-2");
  EXPECT_EQ(q.values[4][2].to_string(), "0");
}

TEST(CharacterTable, TrivialGroup) {
  auto t = burnside_dixon(FiniteGroup::trivial());
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t.degrees, (std::vector<unsigned>{1}));
}
