#pragma once

#include "finstone/error.hpp"
#include "finstone/order/poset.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace finstone {

/// Finite distributive lattice, stored as the lattice of all downsets of its
/// poset of join-irreducibles. Join is union and meet is intersection of
/// those bitsets, so distributivity holds by construction. Elements are
/// indexed in ascending bitset order: index 0 is the bottom and, for a
/// nonempty poset of points, the last index is the full set.
class FinDistLattice {
 public:
  FinDistLattice() = default;

  /// O(P): all downsets of P. Labels default to the join of maximal points.
  static FinDistLattice of_downsets(Poset points, std::size_t budget = kDefaultEnumerationBudget) {
    FinDistLattice d;
    for (const DownSet& s : downsets(points, budget)) d.elems_.push_back(s.members);
    d.points_ = std::move(points);
    d.labels_.reserve(d.elems_.size());
    for (Bits b : d.elems_) d.labels_.push_back(d.default_label(b));
    return d;
  }

  /// Replaces the display labels (one per element, canonical order).
  FinDistLattice with_labels(std::vector<std::string> labels) const {
    if (labels.size() != size()) fail(ErrorKind::InvalidInput, "label count does not match lattice size");
    FinDistLattice d = *this;
    d.labels_ = std::move(labels);
    return d;
  }

  /// Marks the top element as formal (the lower bounded view) or present.
  FinDistLattice with_top(bool present) const {
    FinDistLattice d = *this;
    d.has_top_ = present;
    return d;
  }

  const Poset& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return elems_.size(); }
  Bits bits(std::size_t i) const { return elems_.at(i); }
  const std::vector<Bits>& elements() const noexcept { return elems_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_top() const noexcept { return has_top_; }

  std::optional<std::size_t> find(Bits b) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), b);
    if (it == elems_.end() || *it != b) return std::nullopt;
    return static_cast<std::size_t>(it - elems_.begin());
  }
  std::size_t index_of(Bits b) const {
    auto i = find(b);
    if (!i) fail(ErrorKind::InvalidInput, "bitset is not a downset of the points");
    return *i;
  }
  std::size_t index_of_label(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) fail(ErrorKind::UnknownElement, label);
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return size() - 1; }
  std::size_t join(std::size_t a, std::size_t b) const { return index_of(elems_[a] | elems_[b]); }
  std::size_t meet(std::size_t a, std::size_t b) const { return index_of(elems_[a] & elems_[b]); }
  bool leq(std::size_t a, std::size_t b) const { return subset_of(elems_[a], elems_[b]); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// Element index of the principal downset of point p.
  std::size_t point_element(std::size_t p) const { return index_of(points_.below(p)); }
  /// Element index of the unique lower cover of point p.
  std::size_t point_lower_cover(std::size_t p) const { return index_of(points_.strictly_below(p)); }

  bool is_boolean() const { return points_.is_antichain(); }

 private:
  std::string default_label(Bits b) const {
    if (b == 0) return "0";
    std::string s;
    for_each_bit(points_.maximal(b), [&](std::size_t i) {
      if (!s.empty()) s += '|';
      s += points_.name(i);
    });
    return s;
  }

  Poset points_;
  std::vector<Bits> elems_;
  std::vector<std::string> labels_;
  bool has_top_ = true;
};

/// Lattice homomorphism given by a total map on element indices. Always
/// required to preserve 0, joins and meets; preserves 1 when `bounded`.
struct LatticeHom {
  std::shared_ptr<const FinDistLattice> source;
  std::shared_ptr<const FinDistLattice> target;
  std::vector<std::size_t> map;
  bool bounded = false;

  std::size_t operator()(std::size_t i) const { return map.at(i); }
};

struct HomReport {
  bool ok = true;
  std::string violation;
};

inline HomReport check_hom(const LatticeHom& f) {
  const FinDistLattice& s = *f.source;
  const FinDistLattice& t = *f.target;
  auto bad = [](std::string why) { return HomReport{false, std::move(why)}; };
  if (f.map.size() != s.size()) return bad("map is not total on the source");
  for (std::size_t x : f.map)
    if (x >= t.size()) return bad("map leaves the target");
  if (f(s.bottom()) != t.bottom()) return bad("0 not preserved: " + s.label(s.bottom()) + " -> " + t.label(f(s.bottom())));
  if (f.bounded && f(s.top()) != t.top())
    return bad("1 not preserved: " + s.label(s.top()) + " -> " + t.label(f(s.top())));
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (f(s.join(a, b)) != t.join(f(a), f(b)))
        return bad("join not preserved at (" + s.label(a) + "," + s.label(b) + ")");
      if (f(s.meet(a, b)) != t.meet(f(a), f(b)))
        return bad("meet not preserved at (" + s.label(a) + "," + s.label(b) + ")");
    }
  return {};
}

inline LatticeHom identity_hom(std::shared_ptr<const FinDistLattice> d) {
  LatticeHom f{d, d, {}, d->has_top()};
  for (std::size_t i = 0; i < d->size(); ++i) f.map.push_back(i);
  return f;
}

/// g after f.
inline LatticeHom compose(const LatticeHom& g, const LatticeHom& f) {
  LatticeHom h{f.source, g.target, {}, f.bounded && g.bounded};
  for (std::size_t x : f.map) h.map.push_back(g(x));
  return h;
}

// ---------------------------------------------------------------------------
// Construction from explicit operation tables

/// Join/meet tables over element indices 0..n-1.
struct LatticeTables {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> join;
  std::vector<std::vector<std::size_t>> meet;
  std::size_t bottom = 0;
  std::optional<std::size_t> top;
};

struct ValidatedLattice {
  FinDistLattice lattice;
  std::vector<std::size_t> renaming;  // input index -> canonical index
};

inline constexpr std::size_t kMaxTableSize = 256;

/// Checks the lattice laws and distributivity on all triples, then re-expresses
/// the lattice as downsets of its join-irreducibles.
inline ValidatedLattice from_tables(const LatticeTables& t) {
  const std::size_t n = t.elements.size();
  if (n == 0) fail(ErrorKind::InvalidInput, "lattice has no elements");
  if (n > kMaxTableSize) fail(ErrorKind::TooLarge, "table lattices are limited to 256 elements");
  auto total = [n](const std::vector<std::vector<std::size_t>>& tab, const char* what) {
    if (tab.size() != n) fail(ErrorKind::InvalidInput, std::string(what) + " table has wrong row count");
    for (const auto& row : tab) {
      if (row.size() != n) fail(ErrorKind::InvalidInput, std::string(what) + " table has wrong column count");
      for (std::size_t x : row)
        if (x >= n) fail(ErrorKind::InvalidInput, std::string(what) + " table leaves the element set");
    }
  };
  total(t.join, "join");
  total(t.meet, "meet");
  if (t.bottom >= n || (t.top && *t.top >= n)) fail(ErrorKind::InvalidInput, "bottom/top out of range");
  const auto& J = t.join;
  const auto& M = t.meet;
  const auto& nm = t.elements;
  auto law = [&](const char* name, std::initializer_list<std::size_t> w) {
    std::string s = std::string(name) + " at (";
    bool first = true;
    for (std::size_t x : w) {
      s += (first ? "" : ",") + nm[x];
      first = false;
    }
    fail(ErrorKind::NotLattice, s + ")");
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (J[a][a] != a) law("join idempotence", {a});
    if (M[a][a] != a) law("meet idempotence", {a});
    for (std::size_t b = 0; b < n; ++b) {
      if (J[a][b] != J[b][a]) law("join commutativity", {a, b});
      if (M[a][b] != M[b][a]) law("meet commutativity", {a, b});
      if (J[a][M[a][b]] != a) law("absorption a|(a&b)=a", {a, b});
      if (M[a][J[a][b]] != a) law("absorption a&(a|b)=a", {a, b});
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (J[J[a][b]][c] != J[a][J[b][c]]) law("join associativity", {a, b, c});
        if (M[M[a][b]][c] != M[a][M[b][c]]) law("meet associativity", {a, b, c});
      }
  for (std::size_t a = 0; a < n; ++a)
    if (J[t.bottom][a] != a) fail(ErrorKind::BottomViolation, nm[t.bottom] + " is not below " + nm[a]);
  if (t.top)
    for (std::size_t a = 0; a < n; ++a)
      if (J[*t.top][a] != *t.top) fail(ErrorKind::TopViolation, nm[*t.top] + " is not above " + nm[a]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (M[a][J[b][c]] != J[M[a][b]][M[a][c]])
          fail(ErrorKind::NotDistributive, "(" + nm[a] + "," + nm[b] + "," + nm[c] + ")");

  auto leq = [&](std::size_t a, std::size_t b) { return J[a][b] == b; };
  // x is join-irreducible iff the elements strictly below it have a unique maximum.
  std::vector<std::size_t> irr;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t maxima = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x || !leq(y, x)) continue;
      bool maximal = true;
      for (std::size_t z = 0; z < n && maximal; ++z)
        if (z != x && z != y && leq(y, z) && leq(z, x)) maximal = false;
      if (maximal) ++maxima;
    }
    if (maxima == 1) irr.push_back(x);
  }
  if (irr.size() > kMaxCarrier) fail(ErrorKind::TooLarge, "more than 64 join-irreducibles");
  std::vector<std::string> irr_names;
  std::vector<Bits> irr_below(irr.size(), 0);
  for (std::size_t i = 0; i < irr.size(); ++i) {
    irr_names.push_back(nm[irr[i]]);
    for (std::size_t j = 0; j < irr.size(); ++j)
      if (leq(irr[j], irr[i])) irr_below[i] |= bit(j);
  }
  FinDistLattice canon = FinDistLattice::of_downsets(Poset::from_below_sets(irr_names, irr_below));
  if (canon.size() != n) fail(ErrorKind::NotDistributive, "downset count does not match element count");
  ValidatedLattice out;
  out.renaming.assign(n, 0);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    Bits b = 0;
    for (std::size_t i = 0; i < irr.size(); ++i)
      if (leq(irr[i], x)) b |= bit(i);
    out.renaming[x] = canon.index_of(b);
    labels[out.renaming[x]] = nm[x];
  }
  out.lattice = canon.with_labels(std::move(labels)).with_top(t.top.has_value());
  return out;
}

/// Lattice tables of an already canonical lattice, in canonical order.
inline LatticeTables to_tables(const FinDistLattice& d) {
  LatticeTables t;
  t.elements = d.labels();
  const std::size_t n = d.size();
  t.join.assign(n, std::vector<std::size_t>(n));
  t.meet.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.join[a][b] = d.join(a, b);
      t.meet[a][b] = d.meet(a, b);
    }
  t.bottom = d.bottom();
  if (d.has_top()) t.top = d.top();
  return t;
}

/// Distributive lattice given by a family of subsets closed under union and
/// intersection that contains the empty set. Returns the lattice together with
/// the canonical index of each family member.
inline ValidatedLattice from_set_family(const std::vector<Bits>& family, const std::vector<std::string>& labels) {
  const std::size_t n = family.size();
  std::vector<std::size_t> irr;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t maxima = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (family[y] == family[x] || !subset_of(family[y], family[x])) continue;
      bool maximal = true;
      for (std::size_t z = 0; z < n && maximal; ++z)
        if (family[z] != family[x] && family[z] != family[y] && subset_of(family[y], family[z]) &&
            subset_of(family[z], family[x]))
          maximal = false;
      if (maximal) ++maxima;
    }
    if (maxima == 1) irr.push_back(x);
  }
  if (irr.size() > kMaxCarrier) fail(ErrorKind::TooLarge, "more than 64 join-irreducibles");
  std::vector<std::string> names;
  std::vector<Bits> below(irr.size(), 0);
  for (std::size_t i = 0; i < irr.size(); ++i) {
    names.push_back(labels[irr[i]]);
    for (std::size_t j = 0; j < irr.size(); ++j)
      if (subset_of(family[irr[j]], family[irr[i]])) below[i] |= bit(j);
  }
  FinDistLattice canon = FinDistLattice::of_downsets(Poset::from_below_sets(names, below));
  if (canon.size() != n) fail(ErrorKind::InvalidInput, "set family is not a finite sublattice");
  ValidatedLattice out;
  out.renaming.assign(n, 0);
  std::vector<std::string> canon_labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    Bits b = 0;
    for (std::size_t i = 0; i < irr.size(); ++i)
      if (subset_of(family[irr[i]], family[x])) b |= bit(i);
    out.renaming[x] = canon.index_of(b);
    canon_labels[out.renaming[x]] = labels[x];
  }
  out.lattice = canon.with_labels(std::move(canon_labels));
  return out;
}

// ---------------------------------------------------------------------------
// Birkhoff duality and friends

/// Join-irreducible elements of D (a unique maximal strictly smaller
/// element), ordered as in D and named by their labels. Computed from the
/// lattice order alone, not from the stored representation.
inline Poset birkhoff_points(const FinDistLattice& d) {
  const std::size_t n = d.size();
  std::vector<std::size_t> irr;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t maxima = 0;
    for (std::size_t y = 0; y < n && maxima < 2; ++y) {
      if (y == x || !d.leq(y, x)) continue;
      bool maximal = true;
      for (std::size_t z = 0; z < n && maximal; ++z)
        if (z != x && z != y && d.leq(y, z) && d.leq(z, x)) maximal = false;
      if (maximal) ++maxima;
    }
    if (maxima == 1) irr.push_back(x);
  }
  std::vector<std::string> names;
  std::vector<Bits> below(irr.size(), 0);
  for (std::size_t i = 0; i < irr.size(); ++i) {
    names.push_back(d.label(irr[i]));
    for (std::size_t j = 0; j < irr.size(); ++j)
      if (d.leq(irr[j], irr[i])) below[i] |= bit(j);
  }
  return Poset::from_below_sets(std::move(names), std::move(below));
}

inline FinDistLattice birkhoff_opens(const Poset& p, std::size_t budget = kDefaultEnumerationBudget) {
  return FinDistLattice::of_downsets(p, budget);
}

/// The two-element lattice {0 <= 1}.
inline FinDistLattice two_lattice() {
  return FinDistLattice::of_downsets(Poset::from_below_sets({"1"}, {bit(0)}));
}

struct TopAdjunction {
  std::shared_ptr<const FinDistLattice> extended;  // D with a new top adjoined
  LatticeHom inclusion;                            // D -> D_inf
  LatticeHom to_two;                               // D_inf -> 2, only the new top goes to 1
  LatticeHom from_two;                             // 2 -> D_inf, 1 goes to the new top
};

/// Adjoins a fresh top above everything, even if D already has one. On
/// points this adds one new point above all existing points; the old
/// elements keep their indices.
inline TopAdjunction add_top(const FinDistLattice& d) {
  const Poset& p = d.points();
  const std::size_t n = p.size();
  if (n >= kMaxCarrier) fail(ErrorKind::TooLarge, "cannot adjoin a point to a 64-point lattice");
  std::string top_name = "inf";
  while (p.index_of(top_name)) top_name += "'";
  std::vector<std::string> names = p.names();
  names.push_back(top_name);
  std::vector<Bits> below;
  for (std::size_t i = 0; i < n; ++i) below.push_back(p.below(i));
  below.push_back(low_bits(n + 1));
  std::vector<std::string> labels = d.labels();
  labels.push_back(top_name);
  auto ext = std::make_shared<const FinDistLattice>(
      FinDistLattice::of_downsets(Poset::from_below_sets(names, below)).with_labels(labels));
  auto src = std::make_shared<const FinDistLattice>(d);
  auto two = std::make_shared<const FinDistLattice>(two_lattice());
  TopAdjunction out;
  out.extended = ext;
  out.inclusion = LatticeHom{src, ext, {}, false};
  for (std::size_t i = 0; i < d.size(); ++i) out.inclusion.map.push_back(i);
  out.to_two = LatticeHom{ext, two, std::vector<std::size_t>(ext->size(), 0), true};
  out.to_two.map.back() = 1;
  out.from_two = LatticeHom{two, ext, {0, ext->top()}, true};
  return out;
}

/// Restriction D_inf minus its top -> D, as an index map (identity on indices).
inline std::vector<std::size_t> restrict_below_top(const TopAdjunction& adj) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i + 1 < adj.extended->size(); ++i) r.push_back(i);
  return r;
}

struct Booleanization {
  std::shared_ptr<const FinDistLattice> boolean;  // powerset of the points
  LatticeHom hom;                                 // D -> Bool(D)
};

/// Bool(D) for finite bounded D is the powerset of the points of D; an
/// element maps to the set of points below it.
inline Booleanization booleanize(const FinDistLattice& d, std::size_t budget = kDefaultEnumerationBudget) {
  if (!d.has_top()) fail(ErrorKind::InvalidInput, "booleanization needs a bounded lattice");
  const Poset& p = d.points();
  std::vector<Bits> below;
  for (std::size_t i = 0; i < p.size(); ++i) below.push_back(bit(i));
  if (p.size() >= 64 || (std::size_t{1} << p.size()) > budget)
    fail(ErrorKind::TooLarge, "powerset of " + std::to_string(p.size()) + " points exceeds the budget");
  auto b = std::make_shared<const FinDistLattice>(
      FinDistLattice::of_downsets(Poset::from_below_sets(p.names(), below), budget));
  Booleanization out{b, LatticeHom{std::make_shared<const FinDistLattice>(d), b, {}, true}};
  for (std::size_t i = 0; i < d.size(); ++i) out.hom.map.push_back(b->index_of(d.bits(i)));
  return out;
}

/// Complement of element i in a Boolean lattice, if it exists.
inline std::optional<std::size_t> complement(const FinDistLattice& d, std::size_t i) {
  for (std::size_t j = 0; j < d.size(); ++j)
    if (d.meet(i, j) == d.bottom() && d.join(i, j) == d.top()) return j;
  return std::nullopt;
}

inline constexpr std::size_t kMaxPrimeFilterScan = 1024;

/// Prime filters as sorted lists of element indices, ordered by their least
/// element. Every filter of a finite lattice is principal, so each nonzero
/// element is tried as the generator and the prime condition is checked on
/// all pairs.
inline std::vector<std::vector<std::size_t>> prime_filters(const FinDistLattice& d) {
  if (d.size() > kMaxPrimeFilterScan) fail(ErrorKind::TooLarge, "lattice too large for prime filter scan");
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t m = 0; m < d.size(); ++m) {
    if (m == d.bottom()) continue;
    std::vector<bool> in(d.size(), false);
    std::vector<std::size_t> f;
    for (std::size_t x = 0; x < d.size(); ++x)
      if (d.leq(m, x)) {
        in[x] = true;
        f.push_back(x);
      }
    bool prime = true;
    for (std::size_t a = 0; a < d.size() && prime; ++a)
      for (std::size_t b = a; b < d.size() && prime; ++b) {
        if (in[a] && in[b] && !in[d.meet(a, b)]) prime = false;
        if (in[d.join(a, b)] && !in[a] && !in[b]) prime = false;
      }
    if (prime) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace finstone
