#pragma once

#include "finstone/error.hpp"
#include "finstone/lattice/lattice.hpp"
#include "finstone/order/poset.hpp"

#include <string>
#include <utility>
#include <vector>

namespace finstone {

/// A covering family {family[i] <= target}. Identity coverings are implicit.
struct Covering {
  std::size_t target = 0;
  std::vector<std::size_t> family;
};

struct RawSite {
  Poset carrier;
  std::vector<Covering> coverings;
};

/// A downset closed under every covering of its site.
struct PropSheaf {
  Bits members = 0;
  friend auto operator<=>(const PropSheaf&, const PropSheaf&) = default;
};

/// Finitary pretopology on a poset with binary meets, stored by generating
/// coverings.
class FinSite {
 public:
  /// Checks meets, then stability under base change and one round of
  /// locality against the coverage generated by the listed families.
  static FinSite validate(RawSite raw) {
    FinSite s = build(std::move(raw));
    s.check_base_change();
    s.check_locality();
    return s;
  }

  /// Skips the axiom checks; for sites constructed by the library itself.
  static FinSite trusted(RawSite raw) { return build(std::move(raw)); }

  const Poset& carrier() const noexcept { return carrier_; }
  const std::vector<Covering>& coverings() const noexcept { return coverings_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }

  /// Down-closure of F together with every element having a listed covering inside F.
  Bits closure_step(Bits f) const {
    Bits out = f;
    for (std::size_t k = 0; k < coverings_.size(); ++k)
      if (subset_of(masks_[k], f)) out |= bit(coverings_[k].target);
    return carrier_.down_closure(out);
  }

  Bits closure(Bits f) const {
    for (;;) {
      const Bits next = closure_step(f);
      if (next == f) return f;
      f = next;
    }
  }

  /// Whether the family is a covering of p in the generated coverage.
  bool covers(std::size_t p, const std::vector<std::size_t>& family) const {
    Bits k = 0;
    for (std::size_t x : family) k |= carrier_.below(x);
    return (closure(k) >> p) & 1U;
  }

 private:
  static FinSite build(RawSite raw) {
    FinSite s;
    s.carrier_ = std::move(raw.carrier);
    s.coverings_ = std::move(raw.coverings);
    const Poset& p = s.carrier_;
    const std::size_t n = p.size();
    s.meet_.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        const Bits g = p.maximal(p.below(a) & p.below(b));
        if (popcount(g) != 1) fail(ErrorKind::NoMeet, "(" + p.name(a) + "," + p.name(b) + ")");
        const std::size_t m = bit_indices(g).front();
        s.meet_[a][b] = s.meet_[b][a] = m;
      }
    s.by_target_.assign(n, {});
    for (std::size_t k = 0; k < s.coverings_.size(); ++k) {
      const Covering& c = s.coverings_[k];
      if (c.target >= n) fail(ErrorKind::InvalidInput, "covering target out of range");
      Bits m = 0;
      for (std::size_t x : c.family) {
        if (x >= n || !p.leq(x, c.target))
          fail(ErrorKind::InvalidInput, "covering family member is not below its target " + p.name(c.target));
        m |= bit(x);
      }
      s.masks_.push_back(m);
      s.by_target_[c.target].push_back(k);
    }
    return s;
  }

  // A listed or identity covering G of q refines T when every member of G
  // lies below some member of T.
  bool refined(std::size_t q, Bits t) const {
    const Bits downT = carrier_.down_closure(t);
    if ((downT >> q) & 1U) return true;
    for (std::size_t k : by_target_[q])
      if (subset_of(masks_[k], downT)) return true;
    return false;
  }

  std::string describe(const Covering& c) const {
    std::string s = "{";
    for (std::size_t i = 0; i < c.family.size(); ++i) s += (i ? "," : "") + carrier_.name(c.family[i]);
    return s + "} covers " + carrier_.name(c.target);
  }

  void check_base_change() const {
    for (const Covering& c : coverings_)
      for (std::size_t q : bit_indices(carrier_.below(c.target))) {
        Bits t = 0;
        for (std::size_t x : c.family) t |= bit(meet(x, q));
        if (!refined(q, t))
          fail(ErrorKind::BaseChangeViolation, describe(c) + ", pulled back to " + carrier_.name(q));
      }
  }

  void check_locality() const {
    for (const Covering& c : coverings_)
      for (std::size_t i = 0; i < c.family.size(); ++i)
        for (std::size_t k : by_target_[c.family[i]]) {
          std::vector<std::size_t> composite;
          for (std::size_t j = 0; j < c.family.size(); ++j)
            if (j != i) composite.push_back(c.family[j]);
          for (std::size_t x : coverings_[k].family) composite.push_back(x);
          if (!covers(c.target, composite))
            fail(ErrorKind::LocalityViolation, describe(c) + " composed with " + describe(coverings_[k]));
        }
  }

  Poset carrier_;
  std::vector<Covering> coverings_;
  std::vector<Bits> masks_;
  std::vector<std::vector<std::size_t>> by_target_;
  std::vector<std::vector<std::size_t>> meet_;
};

inline FinSite validate_site(RawSite raw) { return FinSite::validate(std::move(raw)); }

/// The lattice order of D as a poset named by the element labels.
inline Poset lattice_order(const FinDistLattice& d) {
  if (d.size() > kMaxCarrier) fail(ErrorKind::TooLarge, "site carrier is limited to 64 elements");
  std::vector<Bits> below(d.size(), 0);
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < d.size(); ++b)
      if (d.leq(a, b)) below[b] |= bit(a);
  return Poset::from_below_sets(d.labels(), std::move(below));
}

/// Finite-join coverage on D, generated by the empty family covering 0 and
/// {U, V} covering U v V for every pair of distinct elements. Closure under
/// these generators is the same as closure under all finite joins, since a
/// sheaf for the finite-join topology is determined by the value at 0 and
/// the pairwise squares.
inline FinSite fin_coverage(const FinDistLattice& d) {
  RawSite raw{lattice_order(d), {}};
  raw.coverings.push_back(Covering{d.bottom(), {}});
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = a + 1; b < d.size(); ++b) raw.coverings.push_back(Covering{d.join(a, b), {a, b}});
  return FinSite::trusted(std::move(raw));
}

inline bool is_sheaf(const FinSite& s, DownSet f) {
  return s.carrier().is_downset(f.members) && s.closure_step(f.members) == f.members;
}

/// Least fixed point of the one-step closure above F.
inline PropSheaf sheafify(const FinSite& s, DownSet f) { return PropSheaf{s.closure(f.members)}; }

/// All propositional sheaves in ascending bitset order.
inline std::vector<PropSheaf> enumerate_sheaves(const FinSite& s, std::size_t budget = kDefaultEnumerationBudget) {
  std::vector<PropSheaf> out;
  for (const DownSet& f : downsets(s.carrier(), budget))
    if (is_sheaf(s, f)) out.push_back(PropSheaf{f.members});
  return out;
}

struct BasisTheoremReport {
  bool ok = false;
  std::size_t sheaf_count = 0;
  std::size_t lattice_size = 0;
  std::vector<std::size_t> sheaf_of_element;  // U -> index of h_U in the sheaf list
  std::string detail;
};

/// For the finite-join coverage on D: every sheaf is a principal downset
/// h_U and U -> h_U is a bijection onto the sheaves.
inline BasisTheoremReport basis_theorem(const FinDistLattice& d, std::size_t budget = kDefaultEnumerationBudget) {
  const FinSite s = fin_coverage(d);
  const auto sheaves = enumerate_sheaves(s, budget);
  BasisTheoremReport r;
  r.sheaf_count = sheaves.size();
  r.lattice_size = d.size();
  r.sheaf_of_element.assign(d.size(), sheaves.size());
  std::vector<bool> hit(sheaves.size(), false);
  for (std::size_t u = 0; u < d.size(); ++u) {
    const Bits h = s.carrier().below(u);
    for (std::size_t k = 0; k < sheaves.size(); ++k)
      if (sheaves[k].members == h) {
        r.sheaf_of_element[u] = k;
        hit[k] = true;
      }
    if (r.sheaf_of_element[u] == sheaves.size()) {
      r.detail = "principal downset of " + d.label(u) + " is not a sheaf";
      return r;
    }
  }
  for (std::size_t k = 0; k < sheaves.size(); ++k)
    if (!hit[k]) {
      r.detail = "sheaf " + std::to_string(k) + " is not principal";
      return r;
    }
  r.ok = sheaves.size() == d.size();
  return r;
}

}  // namespace finstone
