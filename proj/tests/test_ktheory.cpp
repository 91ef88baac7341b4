#include "support.hpp"

using namespace finstone;
using namespace fixtures;

TEST(TensorGroup, Examples) {
  EXPECT_EQ(tensor_group(2, AbGroup::free(1)), AbGroup::free(2));
  EXPECT_EQ(tensor_group(2, AbGroup::cyclic(2)), AbGroup::make(0, {2, 2}));
  EXPECT_EQ(tensor_group(0, AbGroup::make(3, {4})), AbGroup{});
  EXPECT_EQ(tensor_group(3, AbGroup::make(1, {6})).to_string(), "Z^3 + Z/6 + Z/6 + Z/6");
}

TEST(Profile, Validation) {
  EXPECT_EQ(kind_of([] { CoeffProfile::make("x", 1, 0, {}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { CoeffProfile::make("x", 0, 1, {{0, AbGroup::free(1)}}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { CoeffProfile::make("x", 0, 0, {{0, AbGroup{0, {3, 2}}}}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { CoeffProfile::make("x", 0, 0, {{0, AbGroup::free(1)}, {4, AbGroup::free(1)}}); }),
            ErrorKind::InvalidInput);
  const CoeffProfile s = sphere_k_profile();
  EXPECT_EQ(s.groups.at(0), AbGroup::free(1));
  EXPECT_EQ(s.groups.at(1), AbGroup::cyclic(2));
}

TEST(KOfLocallyCoherent, Examples) {
  const KResult c = k_of_locally_coherent(chain3(), sphere_k_profile());
  EXPECT_EQ(c.at(0), AbGroup::free(2));
  EXPECT_EQ(c.at(1), AbGroup::make(0, {2, 2}));

  const KResult z = k_of_locally_coherent(trivial(), sphere_k_profile());
  EXPECT_EQ(z.at(0), AbGroup{});
  EXPECT_EQ(z.at(1), AbGroup{});

  const KResult d = k_of_locally_coherent(diamond(), constant_profile("Z", AbGroup::free(1)));
  EXPECT_EQ(d.at(0), AbGroup::free(2));
}

TEST(KOfLocallyCoherent, DegreesOutsideTheWindowAreUnknown) {
  const KResult c = k_of_locally_coherent(chain3(), sphere_k_profile());
  EXPECT_FALSE(c.at(-1).has_value());
  EXPECT_FALSE(c.at(2).has_value());
}

TEST(KOfLocallyCoherent, AdjoiningATopAddsOneSummandPerDegree) {
  const CoeffProfile prof = CoeffProfile::make("mixed", -1, 1, {{-1, AbGroup::cyclic(3)}, {0, AbGroup::make(1, {6})}, {1, AbGroup{}}});
  std::mt19937_64 rng(61);
  for (int k = 0; k < 50; ++k) {
    const FinDistLattice d = birkhoff_opens(random_poset(rng, 1 + rng() % 5));
    const KResult base = k_of_locally_coherent(d, prof);
    const KResult ext = k_of_locally_coherent(*add_top(d).extended, prof);
    for (int n = -1; n <= 1; ++n) EXPECT_EQ(*ext.at(n), direct_sum(*base.at(n), prof.groups.at(n)));
  }
}

TEST(Routes, Examples) {
  const RouteReport c = coherent_vs_constructible(chain3(), constant_profile("Z", AbGroup::free(1)));
  EXPECT_EQ(c.coherent.at(0), AbGroup::free(2));
  EXPECT_EQ(c.boolean.at(0), AbGroup::free(2));
  EXPECT_EQ(c.constructible.at(0), AbGroup::free(2));
  EXPECT_EQ(c.combined.routes.size(), 3u);

  const RouteReport t = coherent_vs_constructible(two(), sphere_k_profile());
  EXPECT_EQ(t.combined.at(0), AbGroup::free(1));
  EXPECT_EQ(t.combined.at(1), AbGroup::cyclic(2));

  const RouteReport d = coherent_vs_constructible(diamond(), constant_profile("Z/3", AbGroup::cyclic(3)));
  EXPECT_EQ(d.combined.at(0), AbGroup::make(0, {3, 3}));
  EXPECT_EQ(d.constructible.at(0), AbGroup::make(0, {3, 3}));
}

TEST(Routes, NeedABoundedLattice) {
  EXPECT_EQ(kind_of([] { coherent_vs_constructible(chain3().with_top(false), sphere_k_profile()); }),
            ErrorKind::InvalidInput);
}

TEST(Routes, AgreeOnRandomLattices) {
  const std::vector<CoeffProfile> profiles{constant_profile("Z", AbGroup::free(1)),
                                           constant_profile("Z/2", AbGroup::cyclic(2)),
                                           constant_profile("Z+Z/6", AbGroup::make(1, {6})), sphere_k_profile()};
  std::mt19937_64 rng(62);
  for (int k = 0; k < 60; ++k) {
    const FinDistLattice d = birkhoff_opens(random_poset(rng, 1 + rng() % 6));
    for (const auto& p : profiles) {
      const RouteReport r = coherent_vs_constructible(d, p);
      EXPECT_EQ(r.coherent, r.boolean);
      EXPECT_EQ(r.coherent, r.constructible);
      for (int n = p.lo; n <= p.hi; ++n) EXPECT_EQ(*r.combined.at(n), power(p.groups.at(n), d.points().size()));
    }
  }
}

TEST(Semiorthogonal, Examples) {
  const SemiorthogonalReport a = semiorthogonal_rank_check(antichain(2), constant_profile("Z", AbGroup::free(1)));
  EXPECT_EQ(a.sum_over_points.at(0), AbGroup::free(2));
  EXPECT_EQ(a.via_opens.at(0), AbGroup::free(2));

  const SemiorthogonalReport e = semiorthogonal_rank_check(Poset::from_below_sets({}, {}), sphere_k_profile());
  EXPECT_EQ(e.via_opens.at(0), AbGroup{});

  const SemiorthogonalReport c = semiorthogonal_rank_check(chain(3), sphere_k_profile());
  EXPECT_EQ(c.via_opens.at(0), AbGroup::free(3));
  EXPECT_EQ(c.via_opens.at(1), AbGroup::make(0, {2, 2, 2}));
}

TEST(Semiorthogonal, HoldsForEveryPosetUpToFourPoints) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const Poset& p : all_posets(n)) EXPECT_NO_THROW(semiorthogonal_rank_check(p, sphere_k_profile()));
}
