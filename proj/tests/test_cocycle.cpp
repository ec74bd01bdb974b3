#include <gtest/gtest.h>

#include "support.hpp"

using namespace wittlab;
using wittlab::test::corpus_group;

namespace {

// A = <a> of order 4 in D8 = <a, b>; b(u, u) = a^2 for the nontrivial coset u.
struct D8Setup {
  FiniteGroup g = corpus_group("d8.grp");
  Elem a = g.generators()[0];
  SubgroupSet rot = make_subgroup(g, generated_subgroup(g, std::vector<Elem>{a}));
};

}  // namespace

TEST(Cocycle, TrivialDeformationIsIdentity) {
  for (const char* f : {"d8.grp", "sg32_27.grp", "g16_3.grp"}) {
    auto g = corpus_group(f);
    for (const auto& n : normal_subgroups(g)) {
      if (!n.abelian) continue;
      auto gb = deform_by_cocycle(g, trivial_cocycle(g, n));
      ASSERT_EQ(gb.order(), g.order());
      for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y) ASSERT_EQ(gb.mul(x, y), g.mul(x, y)) << f;
    }
  }
}

TEST(Cocycle, D8DeformsToQ8) {
  D8Setup s;
  const Elem a2 = s.g.mul(s.a, s.a);
  auto c = make_cocycle_data(s.g, s.rot, [&](Elem q, Elem r) { return q == 1 && r == 1 ? a2 : Elem{0}; });
  ASSERT_TRUE(verify_cocycle(s.g, c).ok);
  auto gb = deform_by_cocycle(s.g, c);
  EXPECT_TRUE(are_isomorphic(gb, corpus_group("q8.grp")));
  EXPECT_FALSE(are_isomorphic(gb, s.g));
}

TEST(Cocycle, CoboundaryPerturbationGivesIsomorphicGroup) {
  D8Setup s;
  auto c = trivial_cocycle(s.g, s.rot);
  std::vector<Elem> f{0, s.a};
  auto pert = perturb_by_coboundary(s.g, c, f);
  ASSERT_TRUE(verify_cocycle(s.g, pert).ok);
  auto gb = deform_by_cocycle(s.g, pert);
  EXPECT_TRUE(are_isomorphic(gb, s.g));
}

TEST(Cocycle, BrokenTableIsRejected) {
  D8Setup s;
  auto c = make_cocycle_data(s.g, s.rot, [&](Elem q, Elem r) { return q == 1 && r == 1 ? s.a : Elem{0}; });
  auto check = verify_cocycle(s.g, c);
  EXPECT_FALSE(check.ok);
  EXPECT_TRUE(check.witness.has_value());
  EXPECT_THROW(deform_by_cocycle(s.g, c), PreconditionError);

  auto unnormalized = make_cocycle_data(s.g, s.rot, [&](Elem, Elem) { return s.a; });
  EXPECT_EQ(verify_cocycle(s.g, unnormalized).reason, "not normalized");

  auto outside = make_cocycle_data(s.g, s.rot, [&](Elem q, Elem r) { return q && r ? s.g.generators()[1] : Elem{0}; });
  EXPECT_EQ(verify_cocycle(s.g, outside).reason, "value outside A");
}

TEST(Cocycle, NeedsNormalAbelianSubgroup) {
  auto g = corpus_group("d8.grp");
  std::vector<Elem> all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all[x] = x;
  EXPECT_THROW(trivial_cocycle(g, make_subgroup(g, all)), PreconditionError);
}

TEST(IzumiKosaki, Construction) {
  auto ik = izumi_kosaki();
  EXPECT_EQ(ik.g3.order(), 64u);
  EXPECT_EQ(ik.a.order(), 16u);
  EXPECT_TRUE(ik.a.normal && ik.a.abelian);
  EXPECT_EQ(abelian_invariants(ik.g3, ik.a).factors, (std::vector<unsigned>{4, 4}));
  EXPECT_EQ(ik.cocycle.quotient.quotient.order(), 4u);
  EXPECT_EQ(ik.cocycle.quotient.quotient.exponent(), 2u);
}

// The cocycle identity for the stated data fails; check the failure directly.
TEST(IzumiKosaki, StatedDataViolatesTheCocycleIdentity) {
  auto ik = izumi_kosaki();
  const auto& g = ik.g3;
  const auto& c = ik.cocycle;
  const auto& qg = c.quotient.quotient;
  bool all_hold = true;
  for (Elem p = 0; p < 4; ++p)
    for (Elem q = 0; q < 4; ++q)
      for (Elem r = 0; r < 4; ++r)
        all_hold &= g.mul(c.action[p][c.b(q, r)], c.b(p, qg.mul(q, r))) == g.mul(c.b(qg.mul(p, q), r), c.b(p, q));
  EXPECT_FALSE(all_hold);
  EXPECT_EQ(ik.check.ok, all_hold);
  EXPECT_FALSE(ik.g3b.has_value());
}
