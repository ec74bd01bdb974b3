#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace wittlab;
using wittlab::test::corpus_group;

namespace {

// Klein group ring over Z2 on basis {1, x, y, xy}.
BasedRing klein_ring() {
  Tensor3 c(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) c(i, j, i ^ j) = 1;
  return BasedRing::make(Coefficients::Z2, {"1", "x", "y", "xy"}, 0, c);
}

// Pairs (g, psi) of an abelian group given as exponent vectors over Z_n1 x ... x Z_nk.
std::size_t double_rank_oracle(const std::vector<unsigned>& n) {
  std::size_t total = 1;
  for (auto x : n) total *= x;
  std::size_t count = 0;
  auto decode = [&](std::size_t idx) {
    std::vector<unsigned> v(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
      v[i] = static_cast<unsigned>(idx % n[i]);
      idx /= n[i];
    }
    return v;
  };
  for (std::size_t gi = 0; gi < total; ++gi)
    for (std::size_t pi = 0; pi < total; ++pi) {
      auto g = decode(gi), psi = decode(pi);
      bool ok = true;
      // psi(g) = exp(2 pi i sum psi_i g_i / n_i)
      std::int64_t num = 0, den = 1;
      for (auto x : n) den = std::lcm(den, static_cast<std::int64_t>(x));
      for (std::size_t i = 0; i < n.size(); ++i) {
        ok &= (2 * g[i]) % n[i] == 0;
        ok &= (2 * psi[i]) % n[i] == 0;
        num += static_cast<std::int64_t>(psi[i]) * g[i] * (den / n[i]);
      }
      ok &= num % den == 0;
      count += ok;
    }
  return count;
}

}  // namespace

TEST(Witt, VecZ2Fixtures) {
  EXPECT_EQ(witt_ring(vec_z2_fixture("b0")).size(), 2u);
  EXPECT_EQ(witt_ring(vec_z2_fixture("b1")).size(), 1u);
  EXPECT_EQ(witt_ring(vec_z2_fixture("bi")).size(), 1u);
  EXPECT_EQ(witt_ring(vec_z2_fixture("b-i")).size(), 1u);
  auto bi = vec_z2_fixture("bi");
  EXPECT_TRUE(bi.weakly_symmetric(0));
  EXPECT_FALSE(bi.weakly_symmetric(1));
  EXPECT_TRUE(witt_ring(bi).group_only);
  EXPECT_THROW(vec_z2_fixture("b2"), PreconditionError);
}

TEST(Witt, Q8IsTheKleinGroupRing) {
  auto w = witt_ring(rep_g_fusion_data(corpus_group("q8.grp")));
  ASSERT_EQ(w.size(), 4u);
  EXPECT_TRUE(based_ring_isomorphism(w.ring, klein_ring()));
}

TEST(Witt, D8AndQ8) {
  auto wd = witt_ring(rep_g_fusion_data(corpus_group("d8.grp")));
  auto wq = witt_ring(rep_g_fusion_data(corpus_group("q8.grp")));
  EXPECT_EQ(wd.size(), 5u);
  EXPECT_FALSE(witt_isomorphism(wd, wq));
}

TEST(Witt, TwistedByCentralInvolution) {
  auto q8 = corpus_group("q8.grp");
  auto center_elems = center(q8);
  ASSERT_EQ(center_elems.size(), 2u);
  auto w = witt_ring(rep_g_u_fusion_data(q8, center_elems[1]));
  EXPECT_EQ(w.size(), 5u);
  EXPECT_THROW(rep_g_u_fusion_data(q8, 1), PreconditionError);
}

TEST(Witt, ConstantsAreFusionModTwo) {
  for (const char* f : {"d8.grp", "q8.grp", "g16_2.grp", "g16_3.grp", "sg32_6.grp", "sg32_27.grp"}) {
    auto fd = rep_g_fusion_data(corpus_group(f));
    auto w = witt_ring(fd);
    for (std::size_t x = 0; x < w.size(); ++x)
      for (std::size_t y = 0; y < w.size(); ++y)
        for (std::size_t z = 0; z < w.size(); ++z)
          EXPECT_EQ(w.ring.constants(x, y, z), fd.fusion(w.basis[x], w.basis[y], w.basis[z]) % 2) << f;
    EXPECT_TRUE(w.ring.associative()) << f;
    EXPECT_TRUE(w.ring.unit_law()) << f;
  }
}

TEST(Witt, BasisIsSelfDualWithTrivialD) {
  auto fd = rep_g_fusion_data(corpus_group("g16_2.grp"));
  auto basis = witt_basis(fd);
  for (std::size_t i = 0; i < fd.size(); ++i) {
    bool in = std::find(basis.begin(), basis.end(), i) != basis.end();
    EXPECT_EQ(in, fd.dual[i] == i && fd.d[i].is_one());
  }
}

TEST(Witt, OddOrderGroupsHaveTrivialWittRing) {
  for (const char* f : {"ab3.grp", "ab15.grp", "f21.grp", "heis27.grp", "m27.grp"})
    EXPECT_EQ(witt_ring(rep_g_fusion_data(corpus_group(f))).size(), 1u) << f;
}

TEST(Double, MatchesEnumerationOracle) {
  EXPECT_EQ(double_abelian_witt(cyclic_group(2)).rank(), 3u);
  EXPECT_EQ(double_abelian_witt(cyclic_group(3)).rank(), 1u);
  EXPECT_EQ(double_abelian_witt(direct_product(cyclic_group(2), cyclic_group(2))).rank(), 10u);
  EXPECT_EQ(double_rank_oracle({2}), 3u);
  EXPECT_EQ(double_rank_oracle({3}), 1u);
  EXPECT_EQ(double_rank_oracle({2, 2}), 10u);
  for (const char* f : {"ab4.grp", "ab2_4.grp", "ab2_2_2.grp", "ab2_6.grp", "ab4_4.grp", "ab2_2_4.grp"}) {
    auto g = corpus_group(f);
    auto d = double_abelian_witt(g);
    EXPECT_EQ(d.rank(), double_rank_oracle(d.structure.factors)) << f;
  }
  EXPECT_THROW(double_abelian_witt(corpus_group("d8.grp")), PreconditionError);
}

TEST(Double, ExcludedPairOfZ2) {
  auto d = double_abelian_witt(cyclic_group(2));
  for (const auto& [g, psi] : d.pairs) EXPECT_FALSE(g == 1 && psi[0] == 1);
}

TEST(BasedRings, IsomorphismUnderRelabeling) {
  auto fd = rep_g_fusion_data(corpus_group("g16_3.grp"));
  auto k0 = BasedRing::make(Coefficients::Z, fd.labels, fd.unit, fd.fusion);
  const std::size_t r = k0.size();
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  Tensor3 c(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) c(perm[i], perm[j], perm[k]) = k0.constants(i, j, k);
  auto shuffled = BasedRing::make(Coefficients::Z, fd.labels, perm[fd.unit], c);
  auto map = based_ring_isomorphism(k0, shuffled);
  ASSERT_TRUE(map);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        EXPECT_EQ(shuffled.constants((*map)[i], (*map)[j], (*map)[k]), k0.constants(i, j, k));
  EXPECT_EQ(fingerprint(k0), fingerprint(shuffled));
}

TEST(BasedRings, FingerprintSeparatesNonIsomorphic) {
  auto a = witt_ring(rep_g_fusion_data(corpus_group("g16_3.grp")));
  auto b = witt_ring(rep_g_fusion_data(corpus_group("g16_4.grp")));
  ASSERT_TRUE(fingerprint(a.ring) && fingerprint(b.ring));
  EXPECT_NE(*fingerprint(a.ring), *fingerprint(b.ring));
  auto big = witt_ring(rep_g_fusion_data(corpus_group("ab2_2_2_2.grp")));
  EXPECT_FALSE(fingerprint(big.ring));
}
