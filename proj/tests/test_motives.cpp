#include "oracles.hpp"
#include "support.hpp"

using namespace finstone;
using namespace fixtures;

namespace {

IntVector multiply(const std::vector<std::vector<IntVector>>& t, const IntVector& x, const IntVector& y) {
  const std::size_t n = x.size();
  IntVector z(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) z[k] += x[i] * y[j] * t[i][j][k];
  return z;
}

// A monotone map Q -> P, drawn by rejection; the constant map is the fallback.
std::vector<std::size_t> monotone_map(std::mt19937_64& rng, const Poset& q, const Poset& p) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::size_t> f(q.size());
    for (auto& x : f) x = rng() % p.size();
    bool ok = true;
    for (auto [a, b] : q.strict_pairs())
      if (!p.leq(f[a], f[b])) ok = false;
    if (ok) return f;
  }
  return std::vector<std::size_t>(q.size(), 0);
}

// Preimage along a monotone map is a bounded lattice hom O(P) -> O(Q).
LatticeHom preimage(const std::shared_ptr<const FinDistLattice>& op, const std::shared_ptr<const FinDistLattice>& oq,
                    const std::vector<std::size_t>& f) {
  LatticeHom h{op, oq, {}, true};
  for (std::size_t u = 0; u < op->size(); ++u) {
    Bits pre = 0;
    for (std::size_t x = 0; x < f.size(); ++x)
      if ((op->bits(u) >> f[x]) & 1U) pre |= bit(x);
    h.map.push_back(oq->index_of(pre));
  }
  return h;
}

ValuationData counting_on_diamond() { return ValuationData{AbGroup::free(1), {iv({0}), iv({1}), iv({1}), iv({2})}}; }

}  // namespace

TEST(Presentation, Examples) {
  const FPAbGroup t = motives_presentation(two());
  EXPECT_EQ(t.generator_count, 1u);
  EXPECT_EQ(t.relations.rows(), 0u);

  const FPAbGroup d = motives_presentation(diamond());
  EXPECT_EQ(d.generator_count, 3u);
  ASSERT_EQ(d.relations.rows(), 1u);
  EXPECT_EQ(d.relations.row(0), iv({1, 1, -1}));

  const FPAbGroup c = motives_presentation(chain3());
  EXPECT_EQ(c.generator_count, 2u);
  EXPECT_EQ(c.relations.rows(), 0u);
  EXPECT_EQ(MotiveModule::compute(chain3()).rank(), 2u);
}

TEST(Presentation, OneRowPerIncomparablePair) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const Poset& p : all_posets(n)) {
      const FinDistLattice d = birkhoff_opens(p);
      std::size_t incomparable = 0;
      for (std::size_t a = 0; a < d.size(); ++a)
        for (std::size_t b = a + 1; b < d.size(); ++b)
          if (!d.comparable(a, b)) ++incomparable;
      EXPECT_EQ(motives_presentation(d).relations.rows(), incomparable);
    }
}

TEST(CertifyFree, Examples) {
  const FreenessReport d = certify_free(MotiveModule::compute(diamond()));
  EXPECT_EQ(d.rank, 2u);
  EXPECT_EQ(certify_free(MotiveModule::compute(two())).rank, 1u);
  EXPECT_EQ(certify_free(MotiveModule::compute(birkhoff_opens(antichain(3)))).rank, 3u);
}

TEST(CertifyFree, RankIsPointCountOnRandomLattices) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 200; ++k) {
    const FinDistLattice d = birkhoff_opens(random_poset(rng, 1 + rng() % 6));
    if (d.size() > 32) continue;
    const MotiveModule m = MotiveModule::compute(d);
    const FreenessReport r = certify_free(m);
    EXPECT_EQ(r.rank, d.points().size());
    for (const auto& x : r.diag) EXPECT_LE(x, 1);
  }
}

TEST(PointBasisIso, Examples) {
  const PointBasisIso d = point_basis_iso(MotiveModule::compute(diamond()));
  EXPECT_EQ(d.generator_images, IntMatrix::from_rows({{1, 0, 1}, {0, 1, 1}}));
  EXPECT_TRUE(is_unimodular(d.on_snf_basis));

  EXPECT_EQ(point_basis_iso(MotiveModule::compute(two())).generator_images, IntMatrix::from_rows({{1}}));

  const PointBasisIso c = point_basis_iso(MotiveModule::compute(chain3()));
  EXPECT_EQ(c.generator_images, IntMatrix::from_rows({{1, 1}, {0, 1}}));
  const BigInt det = determinant(c.on_snf_basis);
  EXPECT_TRUE(det == 1 || det == -1);
}

TEST(PointBasisIso, IndicatorsKillRelationsAndMatchOracleDeterminant) {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 100; ++k) {
    const FinDistLattice d = birkhoff_opens(random_poset(rng, 1 + rng() % 5));
    const MotiveModule m = MotiveModule::compute(d);
    const PointBasisIso iso = point_basis_iso(m);
    EXPECT_TRUE((iso.generator_images * m.presentation().relations.transpose()).is_zero());
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t i = 0; i < iso.on_snf_basis.rows(); ++i) rows.push_back(iso.on_snf_basis.row(i));
    const BigInt det = oracle::det(rows);
    EXPECT_TRUE(det == 1 || det == -1);
  }
}

TEST(MuUniv, IsAValuationInPointCoordinates) {
  const MotiveModule m = MotiveModule::compute(diamond());
  EXPECT_EQ(m.mu_univ(0), iv({0, 0}));
  EXPECT_EQ(m.mu_univ(3), iv({1, 1}));
  std::mt19937_64 rng(43);
  for (int k = 0; k < 50; ++k) {
    const FinDistLattice d = birkhoff_opens(random_poset(rng, 1 + rng() % 6));
    const MotiveModule mm = MotiveModule::compute(d);
    ValuationData v{AbGroup::free(d.points().size()), {}};
    for (std::size_t u = 0; u < d.size(); ++u) v.values.push_back(mm.mu_univ(u));
    EXPECT_TRUE(is_valuation(d, v));
    EXPECT_TRUE(oracle::is_valuation(d, v.target, v.values));
  }
}

TEST(SplitTop, Examples) {
  const SplitTopReport t = split_top(two());
  EXPECT_EQ(t.rank, 1u);
  EXPECT_EQ(t.extended_rank, 2u);
  const SplitTopReport z = split_top(trivial());
  EXPECT_EQ(z.rank, 0u);
  EXPECT_EQ(z.extended_rank, 1u);
  const SplitTopReport d = split_top(diamond());
  EXPECT_EQ(d.rank, 2u);
  EXPECT_EQ(d.extended_rank, 3u);
  EXPECT_EQ(d.retraction * d.inclusion, IntMatrix::identity(2));
  EXPECT_EQ(d.to_two * d.from_two, IntMatrix::identity(1));
}

TEST(MotiveHom, Examples) {
  const auto d = share(diamond());
  EXPECT_EQ(motive_hom(identity_hom(d)), IntMatrix::identity(2));
  const LatticeHom collapse{d, share(two()), {0, 1, 0, 1}, true};
  EXPECT_EQ(motive_hom(collapse), IntMatrix::from_rows({{1, 0}}));
  const Booleanization b = booleanize(chain3());
  EXPECT_TRUE(is_unimodular(motive_hom(b.hom)));
  const LatticeHom broken{d, share(two()), {0, 1, 1, 0}, true};
  EXPECT_EQ(kind_of([&] { motive_hom(broken); }), ErrorKind::NotAHom);
}

TEST(MotiveHom, FunctorialOnRandomComposablePairs) {
  std::mt19937_64 rng(44);
  for (int k = 0; k < 100; ++k) {
    const Poset p = random_poset(rng, 1 + rng() % 4);
    const Poset q = random_poset(rng, 1 + rng() % 4);
    const Poset r = random_poset(rng, 1 + rng() % 4);
    const auto op = share(birkhoff_opens(p)), oq = share(birkhoff_opens(q)), orr = share(birkhoff_opens(r));
    const LatticeHom f = preimage(op, oq, monotone_map(rng, q, p));
    const LatticeHom g = preimage(oq, orr, monotone_map(rng, r, q));
    ASSERT_TRUE(check_hom(f).ok);
    ASSERT_TRUE(check_hom(g).ok);
    EXPECT_EQ(motive_hom(compose(g, f)), motive_hom(g) * motive_hom(f));
    // independent check on generators: M(f)[U] is the indicator of f(U)
    const MotiveModule ms = MotiveModule::compute(op), mt = MotiveModule::compute(oq);
    const IntMatrix mf = motive_hom(f);
    for (std::size_t u = 0; u < op->size(); ++u) EXPECT_EQ(mf * ms.mu_univ(u), mt.mu_univ(f(u)));
  }
}

TEST(BooleanizationIso, Examples) {
  const BooleanizationIsoReport c = booleanization_iso(chain3());
  EXPECT_EQ(c.rank, 2u);
  // on point bases [1] - [a] goes to the second singleton
  EXPECT_EQ(c.on_points, IntMatrix::identity(2));
  const BigInt det = determinant(c.on_snf);
  EXPECT_TRUE(det == 1 || det == -1);
  EXPECT_EQ(booleanization_iso(diamond()).on_points, IntMatrix::identity(2));
  EXPECT_EQ(booleanization_iso(birkhoff_opens(chain(3))).rank, 3u);
}

TEST(Valuation, Examples) {
  EXPECT_TRUE(is_valuation(diamond(), counting_on_diamond()));
  const ValuationData flat{AbGroup::free(1), {iv({0}), iv({1}), iv({1}), iv({1})}};
  EXPECT_FALSE(is_valuation(diamond(), flat));
  EXPECT_EQ(kind_of([&] { factor_valuation(MotiveModule::compute(diamond()), flat); }), ErrorKind::NotAValuation);
}

TEST(FactorValuation, Examples) {
  const MotiveModule m = MotiveModule::compute(diamond());
  EXPECT_EQ(factor_valuation(m, counting_on_diamond()), IntMatrix::from_rows({{1, 1}}));

  const ValuationData zero{AbGroup::cyclic(6), std::vector<IntVector>(4, iv({0}))};
  EXPECT_TRUE(factor_valuation(m, zero).is_zero());

  const MotiveModule c = MotiveModule::compute(chain3());
  ValuationData univ{AbGroup::free(2), {}};
  for (std::size_t u = 0; u < 3; ++u) univ.values.push_back(c.mu_univ(u));
  EXPECT_EQ(factor_valuation(c, univ), IntMatrix::identity(2));
}

TEST(FactorValuation, ReproducesRandomValuations) {
  std::mt19937_64 rng(45);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int k = 0; k < 60; ++k) {
    const FinDistLattice d = birkhoff_opens(random_poset(rng, 1 + rng() % 5));
    const MotiveModule m = MotiveModule::compute(d);
    for (const AbGroup& a : {AbGroup::free(1), AbGroup::cyclic(6), AbGroup::make(1, {6})}) {
      std::vector<IntVector> c(d.points().size(), IntVector(a.components()));
      for (auto& v : c)
        for (auto& x : v) x = coeff(rng);
      ValuationData v{a, {}};
      for (std::size_t u = 0; u < d.size(); ++u) {
        IntVector s(a.components(), 0);
        for_each_bit(d.bits(u), [&](std::size_t p) {
          for (std::size_t i = 0; i < s.size(); ++i) s[i] += c[p][i];
        });
        v.values.push_back(s);
      }
      ASSERT_TRUE(oracle::is_valuation(d, a, v.values));
      const IntMatrix h = factor_valuation(m, v);
      for (std::size_t u = 0; u < d.size(); ++u) EXPECT_EQ(apply_factor(m, h, a, u), a.reduce(v.values[u]));
    }
  }
}

TEST(Valuation, AgreesWithOracleOnArbitraryValues) {
  std::mt19937_64 rng(46);
  std::uniform_int_distribution<int> val(-2, 2);
  std::size_t hits = 0;
  for (int k = 0; k < 300; ++k) {
    const FinDistLattice d = birkhoff_opens(random_poset(rng, 1 + rng() % 3));
    const AbGroup a = (k % 2) ? AbGroup::cyclic(2) : AbGroup::free(1);
    ValuationData v{a, {}};
    for (std::size_t u = 0; u < d.size(); ++u) v.values.push_back(iv({u == 0 ? 0 : val(rng)}));
    const bool expected = oracle::is_valuation(d, a, v.values);
    EXPECT_EQ(is_valuation(d, v), expected);
    hits += expected;
  }
  EXPECT_GT(hits, 0u);
}

TEST(Ring, Examples) {
  const RingReport d = ring_structure(MotiveModule::compute(diamond()));
  EXPECT_EQ(d.table[0][0], iv({1, 0}));
  EXPECT_EQ(d.table[1][1], iv({0, 1}));
  EXPECT_EQ(d.table[0][1], iv({0, 0}));

  const RingReport t = ring_structure(MotiveModule::compute(two()));
  EXPECT_EQ(t.table[0][0], iv({1}));
  EXPECT_EQ(t.unit_element, std::optional<std::size_t>{1});

  const MotiveModule cm = MotiveModule::compute(chain3());
  const RingReport c = ring_structure(cm);
  EXPECT_EQ(multiply(c.table, cm.mu_univ(1), cm.mu_univ(2)), cm.mu_univ(1));
}

TEST(Ring, ProductOfIndicatorsIsIndicatorOfMeet) {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 60; ++k) {
    const FinDistLattice d = birkhoff_opens(random_poset(rng, 1 + rng() % 5));
    const MotiveModule m = MotiveModule::compute(d);
    const RingReport r = ring_structure(m);
    for (std::size_t u = 0; u < d.size(); ++u)
      for (std::size_t v = 0; v < d.size(); ++v)
        EXPECT_EQ(multiply(r.table, m.mu_univ(u), m.mu_univ(v)), m.mu_univ(d.meet(u, v)));
  }
}
