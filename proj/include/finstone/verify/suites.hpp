#pragma once

// Property suites over seeded corpora. Every check stops at its first
// counterexample and serializes it; reports carry no timings so that runs
// with the same seed are byte-identical.

#include "finstone/finstone.hpp"
#include "finstone/io/json.hpp"
#include "finstone/verify/corpus.hpp"

#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace finstone::verify {

using io::Json;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_exhaustive = 5;
  std::size_t random = 200;
};

inline CorpusOptions corpus_options(const Options& o) {
  CorpusOptions c;
  c.seed = o.seed;
  c.max_exhaustive = o.max_exhaustive;
  c.random = o.random;
  return c;
}

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void expect(bool cond, const std::string& what) {
  if (!cond) throw CheckFailure(what);
}

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  Json counterexample;

  /// Runs one case unless an earlier case already failed.
  template <class F>
  void run(const std::function<Json()>& context, F&& body) {
    if (!passed) return;
    ++cases;
    std::string kind, message;
    try {
      body();
      return;
    } catch (const Error& e) {
      kind = std::string(to_string(e.kind()));
      message = e.what();
    } catch (const CheckFailure& e) {
      kind = "CheckFailure";
      message = e.what();
    }
    passed = false;
    counterexample = {{"case", context()}, {"kind", kind}, {"message", message}};
  }

  Json to_json() const {
    Json j;
    j["check"] = name;
    j["passed"] = passed;
    j["cases"] = cases;
    return j;
  }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  Json to_json() const {
    Json j;
    j["schemaVersion"] = io::kSchemaVersion;
    j["suite"] = suite;
    j["passed"] = passed();
    std::size_t total = 0;
    Json details = Json::array();
    Json counter;
    for (const auto& c : checks) {
      total += c.cases;
      details.push_back(c.to_json());
      if (!c.passed && counter.is_null()) {
        counter = c.counterexample;
        counter["check"] = c.name;
      }
    }
    j["checks"] = total;
    j["details"] = details;
    j["counterexample"] = counter;
    return j;
  }
};

namespace detail {

inline std::function<Json()> lattice_context(const CorpusEntry& e) {
  return [&e] { return Json{{"corpus", e.name}, {"lattice", io::to_json(*e.lattice)}}; };
}

inline Json site_json(const FinSite& s) {
  Json covs = Json::array();
  for (const auto& c : s.coverings()) {
    Json fam = Json::array();
    for (std::size_t x : c.family) fam.push_back(s.carrier().name(x));
    covs.push_back({{"target", s.carrier().name(c.target)}, {"family", fam}});
  }
  return Json{{"poset", io::to_json(s.carrier())}, {"coverings", covs}};
}

/// The natural map U -> {irreducibles below U} from L to O(points(L)) is a
/// bijection that preserves and reflects the order.
inline void expect_natural_iso(const FinDistLattice& l) {
  const Poset pts = birkhoff_points(l);
  const FinDistLattice back = birkhoff_opens(pts);
  expect(back.size() == l.size(), "O(points(D)) has " + std::to_string(back.size()) + " elements, D has " +
                                      std::to_string(l.size()));
  std::vector<std::size_t> irr;
  for (std::size_t i = 0; i < pts.size(); ++i) irr.push_back(l.index_of_label(pts.name(i)));
  std::vector<Bits> image(l.size(), 0);
  std::set<Bits> seen;
  for (std::size_t u = 0; u < l.size(); ++u) {
    for (std::size_t i = 0; i < irr.size(); ++i)
      if (l.leq(irr[i], u)) image[u] |= bit(i);
    expect(back.find(image[u]).has_value(), "image of " + l.label(u) + " is not a downset of points");
    expect(seen.insert(image[u]).second, "natural map is not injective at " + l.label(u));
  }
  for (std::size_t u = 0; u < l.size(); ++u)
    for (std::size_t v = 0; v < l.size(); ++v)
      expect(l.leq(u, v) == subset_of(image[u], image[v]), "natural map does not preserve the order at (" +
                                                               l.label(u) + "," + l.label(v) + ")");
}

/// Same names, same order.
inline void expect_same_poset(const Poset& a, const Poset& b) {
  expect(a.size() == b.size(), "point counts differ");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto j = b.index_of(a.name(i));
    expect(j.has_value(), "point " + a.name(i) + " missing after the round trip");
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      expect(a.leq(i, k) == b.leq(*b.index_of(a.name(i)), *b.index_of(a.name(k))),
             "order differs at (" + a.name(i) + "," + a.name(k) + ")");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Birkhoff duality

inline CheckResult check_birkhoff(const Options& o) {
  CheckResult r{"birkhoff-round-trips"};
  std::vector<Poset> posets;
  for (std::size_t n = 0; n <= o.max_exhaustive; ++n)
    for (auto& p : all_posets(n)) posets.push_back(std::move(p));
  std::mt19937_64 rng(o.seed + 1);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (std::size_t k = 0; k < o.random; ++k) posets.push_back(random_poset(rng, size(rng)));
  for (const Poset& p : posets) {
    r.run([&p] { return Json{{"poset", io::to_json(p)}}; },
          [&] {
            // P -> O(P) -> points
            const FinDistLattice d = birkhoff_opens(p);
            detail::expect_same_poset(p, birkhoff_points(d));
            // D -> points -> O(points), with D rebuilt from its bare tables
            const ValidatedLattice v = from_tables(to_tables(d));
            detail::expect_natural_iso(v.lattice);
          });
  }
  return r;
}

/// Points of D correspond to prime filters (the coherent-space side).
inline CheckResult check_prime_filters(const std::vector<CorpusEntry>& corpus) {
  CheckResult r{"points-are-prime-filters"};
  for (const auto& e : corpus) {
    const FinDistLattice& d = *e.lattice;
    r.run(detail::lattice_context(e), [&] {
      const auto pf = prime_filters(d);
      expect(pf.size() == d.points().size(), "prime filter count differs from the point count");
      for (std::size_t p = 0; p < d.points().size(); ++p) {
        const std::size_t g = d.point_element(p);
        bool found = false;
        for (const auto& f : pf) found = found || f.front() == g;
        expect(found, "no prime filter generated by " + d.label(g));
      }
    });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Motives

inline CheckResult check_freeness(const std::vector<CorpusEntry>& corpus) {
  CheckResult r{"snf-torsion-free"};
  for (const auto& e : corpus)
    r.run(detail::lattice_context(e), [&] { certify_free(MotiveModule::compute(e.lattice)); });
  return r;
}

inline CheckResult check_rank_oracle(const std::vector<CorpusEntry>& corpus) {
  CheckResult r{"rank-equals-points"};
  for (const auto& e : corpus)
    r.run(detail::lattice_context(e), [&] {
      const MotiveModule m = MotiveModule::compute(e.lattice);
      const std::size_t pts = birkhoff_points(*e.lattice).size();
      expect(m.rank() == pts, "rank " + std::to_string(m.rank()) + " but " + std::to_string(pts) + " points");
      point_basis_iso(m);
    });
  return r;
}

inline CheckResult check_split(const std::vector<CorpusEntry>& corpus) {
  CheckResult r{"split-adjoined-top"};
  for (const auto& e : corpus) r.run(detail::lattice_context(e), [&] { split_top(*e.lattice); });
  return r;
}

/// Modules of the powerset lattices, which depend only on the point count.
class BooleanCache {
 public:
  const MotiveModule& module_for(const FinDistLattice& d) {
    const std::size_t n = d.points().size();
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, MotiveModule::compute(booleanize(d).boolean)).first;
    return it->second;
  }

 private:
  std::map<std::size_t, MotiveModule> cache_;
};

inline CheckResult check_booleanization(const std::vector<CorpusEntry>& corpus, BooleanCache& cache) {
  CheckResult r{"booleanization-iso"};
  for (const auto& e : corpus) {
    if (!e.lattice->has_top()) continue;
    r.run(detail::lattice_context(e), [&] {
      const Booleanization b = booleanize(*e.lattice);
      const MotiveModule& mb = cache.module_for(*e.lattice);
      expect(mb.lattice().elements() == b.boolean->elements(), "cached powerset differs");
      LatticeHom hom{b.hom.source, mb.lattice_ptr(), b.hom.map, true};
      booleanization_iso(MotiveModule::compute(e.lattice), mb, hom);
    });
  }
  return r;
}

inline CheckResult check_ring(const std::vector<CorpusEntry>& corpus) {
  CheckResult r{"ring-idempotents"};
  for (const auto& e : corpus)
    r.run(detail::lattice_context(e), [&] {
      const MotiveModule m = MotiveModule::compute(e.lattice);
      ring_structure(m);
      // [U][V] = [U ^ V] on the point basis, checked directly
      const auto table = m.ring_table();
      const FinDistLattice& d = *e.lattice;
      for (std::size_t u = 0; u < d.size(); ++u)
        for (std::size_t v = 0; v < d.size(); ++v) {
          const IntVector x = m.mu_univ(u), y = m.mu_univ(v);
          IntVector z(m.point_count(), 0);
          for (std::size_t i = 0; i < z.size(); ++i)
            for (std::size_t j = 0; j < z.size(); ++j)
              if (x[i] != 0 && y[j] != 0)
                for (std::size_t k = 0; k < z.size(); ++k) z[k] += x[i] * y[j] * table[i][j][k];
          expect(z == m.mu_univ(d.meet(u, v)), "[" + d.label(u) + "][" + d.label(v) + "] != [meet]");
        }
    });
  return r;
}

// ---------------------------------------------------------------------------
// Sites and sheaves

inline CheckResult check_basis_theorem(const std::vector<CorpusEntry>& corpus) {
  CheckResult r{"sheaves-are-principal"};
  for (const auto& e : corpus) {
    if (e.lattice->size() > 32) continue;
    r.run(detail::lattice_context(e), [&] {
      const BasisTheoremReport b = basis_theorem(*e.lattice);
      expect(b.ok, b.detail.empty() ? "sheaf count differs from |D|" : b.detail);
    });
  }
  return r;
}

/// Random site on the order of a random lattice: pair coverings {a, b} of
/// a v b, optionally the empty covering of 0, closed under base change.
template <class Rng>
FinSite random_site(Rng& rng, const FinDistLattice& d) {
  const Poset carrier = lattice_order(d);
  std::uniform_int_distribution<std::size_t> elem(0, d.size() - 1);
  std::uniform_int_distribution<std::size_t> count(0, d.size());
  std::vector<Covering> gens;
  if (std::uniform_int_distribution<int>(0, 1)(rng)) gens.push_back(Covering{d.bottom(), {}});
  for (std::size_t k = count(rng); k > 0; --k) {
    const std::size_t a = elem(rng), b = elem(rng);
    gens.push_back(Covering{d.join(a, b), {a, b}});
  }
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> all;
  for (const auto& g : gens)
    for (std::size_t q : bit_indices(carrier.below(g.target))) {
      std::set<std::size_t> fam;
      for (std::size_t f : g.family) fam.insert(d.meet(f, q));
      all.emplace(q, std::vector<std::size_t>(fam.begin(), fam.end()));
    }
  RawSite raw{carrier, {}};
  for (const auto& [t, fam] : all) raw.coverings.push_back(Covering{t, fam});
  return FinSite::validate(std::move(raw));
}

inline CheckResult check_sheafification(const Options& o, std::size_t triples) {
  CheckResult r{"sheafification-laws"};
  std::mt19937_64 rng(o.seed + 2);
  for (std::size_t k = 0; k < triples && r.passed; ++k) {
    const FinDistLattice d = random_lattice(rng, 5, 16);
    const FinSite s = random_site(rng, d);
    const Poset& c = s.carrier();
    std::uniform_int_distribution<Bits> subset(0, low_bits(c.size()));
    const DownSet f{c.down_closure(subset(rng))}, g{c.down_closure(subset(rng))};
    r.run([&] { return Json{{"site", detail::site_json(s)}, {"F", io::downset_json(c, f.members)},
                            {"G", io::downset_json(c, g.members)}}; },
          [&] {
            const Bits cf = sheafify(s, f).members, cg = sheafify(s, g).members;
            const Bits cfg = sheafify(s, DownSet{f.members & g.members}).members;
            expect(subset_of(f.members, cf), "closure is not extensive");
            expect(is_sheaf(s, DownSet{cf}), "closure is not a sheaf");
            expect(sheafify(s, DownSet{cf}).members == cf, "closure is not idempotent");
            expect(subset_of(cfg, cf), "closure is not monotone");
            expect(cfg == (cf & cg), "closure does not preserve the meet F ^ G");
            // least sheaf above F, by brute force over all sheaves
            Bits least = c.size() == 64 ? ~Bits{0} : low_bits(c.size());
            for (const PropSheaf& h : enumerate_sheaves(s))
              if (subset_of(f.members, h.members)) least &= h.members;
            expect(least == cf, "closure is not the least sheaf containing F");
          });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Valuations

inline CheckResult check_valuations(const std::vector<CorpusEntry>& corpus, const Options& o, std::size_t per_lattice) {
  CheckResult r{"valuation-universality"};
  std::mt19937_64 rng(o.seed + 3);
  const std::array<AbGroup, 2> targets{AbGroup::free(1), AbGroup::cyclic(6)};
  for (const auto& e : corpus) {
    const FinDistLattice& d = *e.lattice;
    const MotiveModule m = MotiveModule::compute(e.lattice);
    // The universal values generate M(D): their matrix has unit invariant factors.
    r.run(detail::lattice_context(e), [&] {
      IntMatrix mu(d.size(), m.point_count());
      for (std::size_t u = 0; u < d.size(); ++u) {
        const IntVector x = m.mu_univ(u);
        for (std::size_t p = 0; p < x.size(); ++p) mu(u, p) = x[p];
      }
      const SnfResult s = smith_normal_form(mu, SnfTransforms::none);
      expect(s.rank() == m.point_count() && s.torsion_free(), "mu_univ does not generate M(D)");
    });
    for (const AbGroup& a : targets)
      for (std::size_t k = 0; k < per_lattice; ++k) {
        std::uniform_int_distribution<int> coeff(-9, 9);
        std::vector<BigInt> point_value(m.point_count());
        for (auto& c : point_value) c = coeff(rng);
        ValuationData v{a, std::vector<IntVector>(d.size(), IntVector(1, 0))};
        for (std::size_t u = 0; u < d.size(); ++u) {
          for_each_bit(d.bits(u), [&](std::size_t p) { v.values[u][0] += point_value[p]; });
          v.values[u] = a.reduce(v.values[u]);
        }
        r.run([&] { return Json{{"corpus", e.name}, {"target", a.to_string()}, {"draw", k}}; },
              [&] {
                const IntMatrix h = factor_valuation(m, v);
                for (std::size_t u = 0; u < d.size(); ++u)
                  expect(apply_factor(m, h, a, u) == v.values[u], "factor misses v(" + d.label(u) + ")");
                for (std::size_t p = 0; p < m.point_count(); ++p)
                  expect(a.reduce({h(0, p)}) == a.reduce({point_value[p]}), "factor differs on the basis");
              });
      }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Profinite sets

inline constexpr std::size_t kMaxStagePoints = 7;

template <class Rng>
InverseSystem random_system(Rng& rng) {
  std::uniform_int_distribution<std::size_t> depth(1, 3), first(1, 3), grow(0, 3);
  std::vector<std::vector<std::string>> stages;
  std::vector<std::vector<std::size_t>> trans;
  const std::size_t k = depth(rng);
  for (std::size_t i = 0; i <= k; ++i) {
    const std::size_t n = i == 0 ? first(rng) : std::min(kMaxStagePoints, stages.back().size() + grow(rng));
    std::vector<std::string> s;
    for (std::size_t x = 0; x < n; ++x) s.push_back("x" + std::to_string(i) + "." + std::to_string(x));
    if (i > 0) {
      const std::size_t prev = stages.back().size();
      std::vector<std::size_t> t(n);
      for (std::size_t y = 0; y < n; ++y) t[y] = y < prev ? y : std::uniform_int_distribution<std::size_t>(0, prev - 1)(rng);
      std::shuffle(t.begin(), t.end(), rng);
      trans.push_back(std::move(t));
    }
    stages.push_back(std::move(s));
  }
  return InverseSystem::validate(std::move(stages), std::move(trans));
}

inline CheckResult check_profinite_systems(const Options& o, std::size_t systems) {
  CheckResult r{"motives-vs-continuous"};
  std::mt19937_64 rng(o.seed + 4);
  for (std::size_t k = 0; k < systems; ++k) {
    const InverseSystem sys = random_system(rng);
    r.run([&] { return Json{{"system", io::to_json(sys)}}; },
          [&] {
            const MotivesVsContinuousReport rep = motives_vs_continuous(sys);
            expect(rep.ok, rep.detail);
            const ContinuousFunctions cz = continuous_functions(sys, AbGroup::free(1));
            for (std::size_t i = 0; i <= sys.depth(); ++i)
              expect(cz.stage_group(i) == AbGroup::free(sys.stage_size(i)), "rank C(X_i; Z) != |X_i|");
          });
  }
  return r;
}

/// Normal forms and Boolean laws in colim P(X_i), on random elements.
inline CheckResult check_colimit_laws(const Options& o, std::size_t systems, std::size_t per_system) {
  CheckResult r{"colimit-normal-forms"};
  std::mt19937_64 rng(o.seed + 6);
  for (std::size_t k = 0; k < systems; ++k) {
    const InverseSystem sys = random_system(rng);
    const ColimitBoolean b = colimit_boolean(sys);
    const ContinuousFunctions cz = continuous_functions(sys, AbGroup::free(1));
    const std::size_t deep = sys.depth();
    auto draw = [&] {
      const std::size_t st = std::uniform_int_distribution<std::size_t>(0, deep)(rng);
      return b.make(st, std::uniform_int_distribution<Bits>(0, low_bits(sys.stage_size(st)))(rng));
    };
    auto draw_fn = [&] {
      const std::size_t st = std::uniform_int_distribution<std::size_t>(0, deep)(rng);
      std::vector<IntVector> v(sys.stage_size(st));
      for (auto& x : v) x = {BigInt(std::uniform_int_distribution<int>(-3, 3)(rng))};
      return cz.make(st, std::move(v));
    };
    for (std::size_t e = 0; e < per_system; ++e) {
      const ColimSubset x = draw(), y = draw(), z = draw();
      const ColimFunction f = draw_fn(), g = draw_fn();
      r.run([&] { return Json{{"system", io::to_json(sys)}, {"draw", e}}; },
            [&] {
              const ColimSubset nx = b.normalize(x);
              expect(b.normalize(nx) == nx, "normalizing twice changes the element");
              expect(b.lift(nx, deep) == b.lift(x, deep), "normal form is a different element");
              expect(b.equal(x, y) == (b.lift(x, deep) == b.lift(y, deep)), "equality disagrees with the deepest stage");
              expect(b.complement(b.join(x, y)) == b.meet(b.complement(x), b.complement(y)), "De Morgan fails");
              expect(b.meet(x, b.complement(x)) == b.normalize(b.bottom()), "x ^ x' != 0");
              expect(b.join(x, b.complement(x)) == b.normalize(b.top()), "x v x' != 1");
              expect(b.meet(x, b.join(y, z)) == b.join(b.meet(x, y), b.meet(x, z)), "distributivity fails");
              expect(cz.add(f, g) == cz.add(g, f), "function addition is not commutative");
              expect(cz.add(f, cz.zero()) == cz.normalize(f), "zero is not neutral");
              expect(cz.lift(cz.normalize(f), deep) == cz.lift(f, deep), "function normal form changes the value");
            });
    }
  }
  return r;
}

inline CheckResult check_partitions(std::size_t max_set) {
  CheckResult r{"partitions-bell"};
  static constexpr std::array<std::size_t, 9> kBell{1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (std::size_t n = 0; n <= max_set; ++n)
    r.run([n] { return Json{{"setSize", n}}; },
          [&] {
            std::vector<std::string> set;
            for (std::size_t i = 0; i < n; ++i) set.push_back("s" + std::to_string(i));
            const PartitionReport rep = finite_partitions(set);
            expect(rep.partitions.size() == kBell.at(n), "partition count " + std::to_string(rep.partitions.size()));
            expect(rep.powerset_is_colimit, rep.detail);
            expect(rep.beta_points == n, "limit of partitions has the wrong number of points");
          });
  return r;
}

// ---------------------------------------------------------------------------
// K-theory routes

inline std::vector<CoeffProfile> standard_profiles() {
  return {constant_profile("Z", AbGroup::free(1)), constant_profile("Z/2", AbGroup::cyclic(2)),
          constant_profile("Z + Z/6", AbGroup::make(1, {6}))};
}

inline CheckResult check_routes(const std::vector<CorpusEntry>& corpus, BooleanCache& cache) {
  CheckResult r{"three-routes-agree"};
  const auto profiles = standard_profiles();
  for (const auto& e : corpus) {
    if (!e.lattice->has_top()) continue;
    for (const auto& prof : profiles)
      r.run([&] { return Json{{"corpus", e.name}, {"profile", prof.label}}; },
            [&] { coherent_vs_constructible(*e.lattice, prof, &cache.module_for(*e.lattice)); });
  }
  return r;
}

/// Adjoining a top adds exactly one copy of the profile in every degree.
inline CheckResult check_top_summand(const std::vector<CorpusEntry>& corpus) {
  CheckResult r{"top-adds-one-summand"};
  const CoeffProfile prof = sphere_k_profile();
  for (const auto& e : corpus)
    r.run(detail::lattice_context(e), [&] {
      const KResult base = k_of_locally_coherent(*e.lattice, prof);
      const KResult ext = k_of_locally_coherent(*add_top(*e.lattice).extended, prof);
      for (int n = prof.lo; n <= prof.hi; ++n)
        expect(ext.groups.at(n) == direct_sum(base.groups.at(n), prof.groups.at(n)),
               "degree " + std::to_string(n) + " did not gain one summand");
    });
  return r;
}

/// K(sphere) on the three-element chain: Z^2 in degree 0, (Z/2)^2 in degree 1.
inline CheckResult check_sphere_chain() {
  CheckResult r{"sphere-on-three-chain"};
  r.run([] { return Json{{"lattice", "three-element chain"}}; },
        [] {
          const FinDistLattice chain = FinDistLattice::of_downsets(Poset::from_below_sets({"a", "b"}, {0b01, 0b11}));
          expect(chain.size() == 3, "chain has the wrong size");
          const RouteReport rep = coherent_vs_constructible(chain, sphere_k_profile());
          expect(rep.combined.at(0) == AbGroup::free(2), "degree 0 is " + rep.combined.at(0)->to_string());
          expect(rep.combined.at(1) == AbGroup::make(0, {2, 2}), "degree 1 is " + rep.combined.at(1)->to_string());
          expect(!rep.combined.at(2).has_value() && !rep.combined.at(-1).has_value(), "degrees outside the window are known");
        });
  return r;
}

inline CheckResult check_semiorthogonal(const Options& o) {
  CheckResult r{"semiorthogonal-sum"};
  std::vector<CoeffProfile> profiles = standard_profiles();
  profiles.push_back(sphere_k_profile());
  for (std::size_t n = 0; n <= o.max_exhaustive; ++n)
    for (const Poset& p : all_posets(n))
      for (const auto& prof : profiles)
        r.run([&] { return Json{{"poset", io::to_json(p)}, {"profile", prof.label}}; },
              [&] { semiorthogonal_rank_check(p, prof); });
  return r;
}

// ---------------------------------------------------------------------------
// Scissors congruence

inline GridGeometry overlapping_intervals() {
  return GridGeometry::validate(1, {{BigRational(0), BigRational(1, 2), BigRational(1), BigRational(3, 2)}});
}

inline CheckResult check_scissors_overlap() {
  CheckResult r{"overlapping-intervals-rank"};
  r.run([] { return Json{{"polytopes", "[0,1] and [1/2,3/2]"}}; },
        [] {
          const GridGeometry g = overlapping_intervals();
          const PolytopeLattice pl = generated_sublattice(g, {0b011, 0b110});
          const PolytopeModuleReport rep = polytope_module(pl);
          expect(pl.lattice.size() == 5, "generated sublattice has " + std::to_string(pl.lattice.size()) + " elements");
          expect(rep.rank == 3, "rank " + std::to_string(rep.rank));
        });
  return r;
}

inline CheckResult check_scissors_disjoint(const Options& o, std::size_t pairs) {
  CheckResult r{"disjoint-union-additive"};
  const GridGeometry g = GridGeometry::validate(
      2, {{BigRational(0), BigRational(1, 3), BigRational(1), BigRational(2)}, {BigRational(0), BigRational(1, 2), BigRational(1)}});
  const PolytopeLattice pl = grid_lattice(g);
  const MotiveModule m = MotiveModule::compute(pl.lattice);
  std::mt19937_64 rng(o.seed + 5);
  std::uniform_int_distribution<Bits> cells(1, g.all_cells());
  for (std::size_t k = 0; k < pairs; ++k) {
    const Bits a = cells(rng);
    Bits b = cells(rng) & ~a;
    if (b == 0) b = g.all_cells() & ~a;
    r.run([&] { return Json{{"P", g.polytope_label(a)}, {"Q", g.polytope_label(b)}}; },
          [&] {
            const IntVector pa = m.mu_univ(pl.lattice.index_of(a)), pb = m.mu_univ(pl.lattice.index_of(b));
            IntVector sum = pa;
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += pb[i];
            expect(m.mu_univ(pl.lattice.index_of(a | b)) == sum, "[P u Q] != [P] + [Q]");
            expect(g.measure(a | b) == g.measure(a) + g.measure(b), "measure is not additive");
          });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"birkhoff", "freeness",       "sheaf",   "valuation",
                                              "profinite", "ktheory-routes", "scissors"};
  return names;
}

inline bool is_suite(const std::string& name) {
  if (name == "all") return true;
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

inline constexpr std::size_t kSheafTriples = 500;
inline constexpr std::size_t kValuationsPerLattice = 100;
inline constexpr std::size_t kProfiniteSystems = 20;
inline constexpr std::size_t kColimitDraws = 500;
inline constexpr std::size_t kPartitionSetMax = 6;
inline constexpr std::size_t kDisjointPairs = 100;

inline SuiteReport run_suite(const std::string& name, const Options& o) {
  if (!is_suite(name) || name == "all") fail(ErrorKind::InvalidInput, "unknown suite: " + name);
  SuiteReport rep{name, {}};
  auto corpus = [&] { return build_corpus(corpus_options(o)); };
  if (name == "birkhoff") {
    rep.checks.push_back(check_birkhoff(o));
    rep.checks.push_back(check_prime_filters(corpus()));
  } else if (name == "freeness") {
    const auto c = corpus();
    BooleanCache cache;
    rep.checks.push_back(check_freeness(c));
    rep.checks.push_back(check_rank_oracle(c));
    rep.checks.push_back(check_split(c));
    rep.checks.push_back(check_booleanization(c, cache));
    rep.checks.push_back(check_ring(c));
  } else if (name == "sheaf") {
    rep.checks.push_back(check_basis_theorem(corpus()));
    rep.checks.push_back(check_sheafification(o, kSheafTriples));
  } else if (name == "valuation") {
    rep.checks.push_back(check_valuations(corpus(), o, kValuationsPerLattice));
  } else if (name == "profinite") {
    rep.checks.push_back(check_profinite_systems(o, kProfiniteSystems));
    rep.checks.push_back(check_colimit_laws(o, kProfiniteSystems, kColimitDraws));
    rep.checks.push_back(check_partitions(kPartitionSetMax));
  } else if (name == "ktheory-routes") {
    BooleanCache cache;
    const auto c = corpus();
    rep.checks.push_back(check_routes(c, cache));
    rep.checks.push_back(check_top_summand(c));
    rep.checks.push_back(check_sphere_chain());
    rep.checks.push_back(check_semiorthogonal(o));
  } else if (name == "scissors") {
    rep.checks.push_back(check_scissors_overlap());
    rep.checks.push_back(check_scissors_disjoint(o, kDisjointPairs));
  }
  return rep;
}

struct AllReport {
  std::vector<SuiteReport> suites;

  bool passed() const {
    for (const auto& s : suites)
      if (!s.passed()) return false;
    return true;
  }

  Json to_json() const {
    Json j;
    j["schemaVersion"] = io::kSchemaVersion;
    j["suite"] = "all";
    j["passed"] = passed();
    std::size_t total = 0;
    Json arr = Json::array();
    for (const auto& s : suites) {
      Json sj = s.to_json();
      total += sj["checks"].get<std::size_t>();
      sj.erase("schemaVersion");
      arr.push_back(std::move(sj));
    }
    j["checks"] = total;
    j["suites"] = arr;
    return j;
  }
};

inline AllReport run_all(const Options& o) {
  AllReport r;
  for (const auto& n : suite_names()) r.suites.push_back(run_suite(n, o));
  return r;
}

}  // namespace finstone::verify
