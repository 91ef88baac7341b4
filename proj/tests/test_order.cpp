#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace finstone;

namespace {

Poset chain2() { return Poset::validate({{"a", "b"}, {{"a", "b"}}, true}); }
Poset antichain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Bits> below;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    below.push_back(bit(i));
  }
  return Poset::from_below_sets(names, below);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(PosetValidate, ChainWithExplicitReflexivePairs) {
  RawPoset raw{{"a", "b"}, {{"a", "a"}, {"b", "b"}, {"a", "b"}}, false};
  const Poset p = Poset::validate(raw);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_TRUE(p.leq(0, 1));
  EXPECT_FALSE(p.leq(1, 0));
}

TEST(PosetValidate, RejectsBrokenAxioms) {
  EXPECT_EQ(kind_of([] { Poset::validate({{"a", "b"}, {{"a", "b"}, {"b", "a"}}, true}); }), ErrorKind::NotAntisymmetric);
  EXPECT_EQ(kind_of([] { Poset::validate({{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, true}); }), ErrorKind::NotTransitive);
  EXPECT_EQ(kind_of([] { Poset::validate({{"a", "b"}, {{"a", "b"}}, false}); }), ErrorKind::NotReflexive);
  EXPECT_EQ(kind_of([] { Poset::validate({{"a", "a"}, {}, true}); }), ErrorKind::DuplicateElement);
  EXPECT_EQ(kind_of([] { Poset::validate({{"a"}, {{"a", "z"}}, true}); }), ErrorKind::UnknownElement);
}

TEST(PosetValidate, ErrorNamesTheWitnesses) {
  try {
    Poset::validate({{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, true});
    FAIL();
  } catch (const Error& e) {
    const std::string w = e.what();
    EXPECT_NE(w.find('a'), std::string::npos);
    EXPECT_NE(w.find('c'), std::string::npos);
  }
}

TEST(Downsets, Examples) {
  EXPECT_EQ(downsets(Poset::from_below_sets({}, {})).size(), 1u);
  EXPECT_EQ(downsets(antichain(2)).size(), 4u);
  const auto c = downsets(chain2());
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].members, 0u);
  EXPECT_EQ(c[1].members, 0b01u);
  EXPECT_EQ(c[2].members, 0b11u);
}

TEST(Downsets, MatchBruteForceAndFormALattice) {
  std::vector<Poset> posets;
  for (std::size_t n = 0; n <= 5; ++n)
    for (auto& p : all_posets(n)) posets.push_back(p);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int k = 0; k < 200; ++k) posets.push_back(random_poset(rng, size(rng)));
  for (const Poset& p : posets) {
    const auto ds = downsets(p);
    std::vector<Bits> got;
    for (const auto& d : ds) got.push_back(d.members);
    ASSERT_EQ(got, oracle::downsets(p));
    const std::set<Bits> all(got.begin(), got.end());
    EXPECT_TRUE(all.count(0));
    EXPECT_TRUE(all.count(low_bits(p.size())));
    for (Bits a : got)
      for (Bits b : got) {
        EXPECT_TRUE(all.count(a | b));
        EXPECT_TRUE(all.count(a & b));
      }
  }
}

TEST(Downsets, BudgetIsEnforced) {
  EXPECT_EQ(kind_of([] { downsets(antichain(10), 1000); }), ErrorKind::TooLarge);
  EXPECT_EQ(downsets(antichain(10), 1024).size(), 1024u);
}

TEST(PrincipalDownset, Examples) {
  EXPECT_EQ(principal_downset(chain2(), "b").members, 0b11u);
  EXPECT_EQ(principal_downset(chain2(), "a").members, 0b01u);
  EXPECT_EQ(principal_downset(antichain(2), "a").members, 0b01u);
  EXPECT_EQ(kind_of([] { principal_downset(chain2(), "z"); }), ErrorKind::UnknownElement);
}

TEST(Height, Examples) {
  EXPECT_EQ(height(antichain(3)), (std::vector<std::size_t>{0, 0, 0}));
  const Poset chain3 = Poset::validate({{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, true});
  EXPECT_EQ(height(chain3), (std::vector<std::size_t>{0, 1, 2}));
  const Poset diamond =
      Poset::validate({{"0", "u", "v", "1"}, {{"0", "u"}, {"0", "v"}, {"0", "1"}, {"u", "1"}, {"v", "1"}}, true});
  EXPECT_EQ(height(diamond), (std::vector<std::size_t>{0, 1, 1, 2}));
}

TEST(Height, StrictlyIncreasingAndMatchesOracle) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const Poset& p : all_posets(n)) {
      const auto h = height(p);
      EXPECT_EQ(h, oracle::heights(p));
      for (auto [a, b] : p.strict_pairs()) EXPECT_LT(h[a], h[b]);
    }
}

TEST(Generate, CountsMatchKnownSequence) {
  // unlabeled posets: 1, 1, 2, 5, 16, 63, 318
  const std::vector<std::size_t> expected{1, 1, 2, 5, 16, 63};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(all_posets(n).size(), expected[n]) << n;
}

TEST(Generate, ClassesArePairwiseNonIsomorphic) {
  const auto ps = all_posets(4);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) EXPECT_FALSE(isomorphic(ps[i], ps[j]));
}

TEST(Incidence, Examples) {
  const IncidenceAlgebra a = incidence_algebra(chain2());
  EXPECT_EQ(a.rank(), 3u);
  const auto mu = a.moebius();
  EXPECT_EQ(a.at(mu, 0, 1), -1);
  EXPECT_EQ(a.at(mu, 0, 0), 1);
  EXPECT_EQ(a.multiply(mu, a.zeta()), a.delta());

  const IncidenceAlgebra one = incidence_algebra(antichain(1));
  EXPECT_EQ(one.rank(), 1u);
  EXPECT_EQ(one.moebius(), one.delta());
}

TEST(Incidence, BooleanLatticeMoebiusIsSignedCount) {
  // mu(S, T) = (-1)^{|T \ S|} on the subset lattice of a 3-set
  std::vector<std::string> names;
  std::vector<Bits> below;
  for (Bits s = 0; s < 8; ++s) {
    names.push_back("s" + std::to_string(s));
    Bits b = 0;
    for (Bits t = 0; t < 8; ++t)
      if ((t & s) == t) b |= bit(t);
    below.push_back(b);
  }
  const IncidenceAlgebra a = incidence_algebra(Poset::from_below_sets(names, below));
  const auto mu = a.moebius();
  for (auto [s, t] : a.basis_pairs()) EXPECT_EQ(a.at(mu, s, t), (popcount(t & ~s) % 2 == 0) ? 1 : -1);
}

TEST(Incidence, MoebiusInvertsZetaAndProductIsAssociative) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 0; n <= 5; ++n)
    for (const Poset& p : all_posets(n)) {
      const IncidenceAlgebra a = incidence_algebra(p);
      const auto mu = a.moebius();
      EXPECT_EQ(a.multiply(mu, a.zeta()), a.delta());
      EXPECT_EQ(a.multiply(a.zeta(), mu), a.delta());
      std::uniform_int_distribution<int> c(-4, 4);
      auto draw = [&] {
        auto f = a.zero();
        for (auto& x : f) x = c(rng);
        return f;
      };
      for (int k = 0; k < 100; ++k) {
        const auto f = draw(), g = draw(), h = draw();
        ASSERT_EQ(a.multiply(a.multiply(f, g), h), a.multiply(f, a.multiply(g, h)));
      }
      const auto f = draw();
      EXPECT_EQ(a.multiply(a.delta(), f), f);
      EXPECT_EQ(a.multiply(f, a.delta()), f);
    }
}
