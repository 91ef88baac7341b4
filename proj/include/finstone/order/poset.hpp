#pragma once

#include "finstone/error.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace finstone {

/// Subsets of a carrier of at most 64 elements; bit i is element i.
using Bits = std::uint64_t;
inline constexpr std::size_t kMaxCarrier = 64;

constexpr Bits bit(std::size_t i) { return Bits{1} << i; }
constexpr Bits low_bits(std::size_t n) { return n >= 64 ? ~Bits{0} : bit(n) - 1; }
constexpr bool subset_of(Bits a, Bits b) { return (a & ~b) == 0; }
inline std::size_t popcount(Bits b) { return static_cast<std::size_t>(std::popcount(b)); }

template <class F>
void for_each_bit(Bits b, F&& f) {
  while (b) {
    f(static_cast<std::size_t>(std::countr_zero(b)));
    b &= b - 1;
  }
}

inline std::vector<std::size_t> bit_indices(Bits b) {
  std::vector<std::size_t> out;
  for_each_bit(b, [&](std::size_t i) { out.push_back(i); });
  return out;
}

/// Default cap on the number of objects any exhaustive enumeration may produce.
inline constexpr std::size_t kDefaultEnumerationBudget = std::size_t{1} << 20;

/// A downward closed subset of a poset's carrier.
struct DownSet {
  Bits members = 0;

  bool contains(std::size_t i) const { return (members >> i) & 1U; }
  std::size_t size() const { return popcount(members); }
  friend auto operator<=>(const DownSet&, const DownSet&) = default;
};

/// Unvalidated poset description: element identifiers plus related pairs.
struct RawPoset {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
  // JSON documents list only the non-reflexive pairs.
  bool reflexive_implicit = false;
};

/// Finite partial order. Elements are identified by their position in the
/// input list; every bitset in the library refers to that order.
class Poset {
 public:
  Poset() = default;

  /// Checks the partial order axioms without repairing anything.
  static Poset validate(const RawPoset& raw) {
    if (raw.elements.size() > kMaxCarrier)
      fail(ErrorKind::TooLarge, "poset has " + std::to_string(raw.elements.size()) + " elements, limit is 64");
    Poset p;
    p.names_ = raw.elements;
    for (std::size_t i = 0; i < p.names_.size(); ++i)
      if (!p.index_.emplace(p.names_[i], i).second) fail(ErrorKind::DuplicateElement, p.names_[i]);
    const std::size_t n = p.size();
    p.below_.assign(n, 0);
    for (const auto& [a, b] : raw.leq) {
      const std::size_t i = p.require(a), j = p.require(b);
      p.below_[j] |= bit(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (raw.reflexive_implicit)
        p.below_[i] |= bit(i);
      else if (!(p.below_[i] & bit(i)))
        fail(ErrorKind::NotReflexive, "(" + p.names_[i] + "," + p.names_[i] + ")");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p.leq(i, j) && p.leq(j, i))
          fail(ErrorKind::NotAntisymmetric, "(" + p.names_[i] + "," + p.names_[j] + ")");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i : bit_indices(p.below_[j]))
        for (std::size_t h : bit_indices(p.below_[i]))
          if (!p.leq(h, j))
            fail(ErrorKind::NotTransitive, "(" + p.names_[h] + "," + p.names_[i] + "," + p.names_[j] + ")");
    p.finish();
    return p;
  }

  /// Builds a poset from principal downsets that are already known to be a
  /// partial order (bit i of below[j] set iff i <= j).
  static Poset from_below_sets(std::vector<std::string> names, std::vector<Bits> below) {
    Poset p;
    p.names_ = std::move(names);
    for (std::size_t i = 0; i < p.names_.size(); ++i)
      if (!p.index_.emplace(p.names_[i], i).second) fail(ErrorKind::DuplicateElement, p.names_[i]);
    p.below_ = std::move(below);
    p.finish();
    return p;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t require(const std::string& name) const {
    auto i = index_of(name);
    if (!i) fail(ErrorKind::UnknownElement, name);
    return *i;
  }

  bool leq(std::size_t a, std::size_t b) const { return (below_[b] >> a) & 1U; }
  bool lt(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  Bits all() const { return low_bits(size()); }
  /// Elements <= i.
  Bits below(std::size_t i) const { return below_[i]; }
  /// Elements >= i.
  Bits above(std::size_t i) const { return above_[i]; }
  /// Elements < i.
  Bits strictly_below(std::size_t i) const { return below_[i] & ~bit(i); }
  /// Maximal elements of strictly_below(i).
  Bits lower_covers(std::size_t i) const { return maximal(strictly_below(i)); }

  Bits maximal(Bits s) const {
    Bits out = 0;
    for_each_bit(s, [&](std::size_t i) {
      if ((above_[i] & s) == bit(i)) out |= bit(i);
    });
    return out;
  }
  Bits minimal(Bits s) const {
    Bits out = 0;
    for_each_bit(s, [&](std::size_t i) {
      if ((below_[i] & s) == bit(i)) out |= bit(i);
    });
    return out;
  }

  bool is_downset(Bits s) const {
    bool ok = true;
    for_each_bit(s, [&](std::size_t i) { ok = ok && subset_of(below_[i], s); });
    return ok;
  }
  Bits down_closure(Bits s) const {
    Bits out = 0;
    for_each_bit(s, [&](std::size_t i) { out |= below_[i]; });
    return out;
  }
  Bits up_closure(Bits s) const {
    Bits out = 0;
    for_each_bit(s, [&](std::size_t i) { out |= above_[i]; });
    return out;
  }

  bool is_antichain() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (below_[i] != bit(i)) return false;
    return true;
  }

  /// Elements sorted so that every element comes after everything below it.
  const std::vector<std::size_t>& linear_extension() const { return linext_; }

  /// Non-reflexive related pairs (a, b) with a < b, ordered by (b, a).
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t b = 0; b < size(); ++b)
      for (std::size_t a : bit_indices(strictly_below(b))) out.emplace_back(a, b);
    return out;
  }

  friend bool operator==(const Poset& a, const Poset& b) { return a.names_ == b.names_ && a.below_ == b.below_; }

 private:
  void finish() {
    const std::size_t n = size();
    above_.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for_each_bit(below_[j], [&](std::size_t i) { above_[i] |= bit(j); });
    linext_.resize(n);
    for (std::size_t i = 0; i < n; ++i) linext_[i] = i;
    // |below| strictly increases along <, so sorting by it gives a linear extension.
    std::stable_sort(linext_.begin(), linext_.end(),
                     [&](std::size_t a, std::size_t b) { return popcount(below_[a]) < popcount(below_[b]); });
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Bits> below_;
  std::vector<Bits> above_;
  std::vector<std::size_t> linext_;
};

/// Every downward closed subset, sorted ascending as unsigned integers
/// (bit i = element i), so the empty set comes first. Throws TooLarge once
/// more than `budget` downsets have been produced.
inline std::vector<DownSet> downsets(const Poset& p, std::size_t budget = kDefaultEnumerationBudget) {
  std::vector<DownSet> out;
  const auto& order = p.linear_extension();
  // Depth-first over a linear extension: an element may join the set only
  // when everything strictly below it is already in, so no branch dead-ends.
  auto rec = [&](auto&& self, std::size_t k, Bits cur) -> void {
    if (k == order.size()) {
      if (out.size() >= budget)
        fail(ErrorKind::TooLarge, "more than " + std::to_string(budget) + " downsets");
      out.push_back(DownSet{cur});
      return;
    }
    const std::size_t e = order[k];
    self(self, k + 1, cur);
    if (subset_of(p.strictly_below(e), cur)) self(self, k + 1, cur | bit(e));
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline DownSet principal_downset(const Poset& p, const std::string& element) {
  return DownSet{p.below(p.require(element))};
}

/// Length of the longest strictly increasing chain ending at each element.
inline std::vector<std::size_t> height(const Poset& p) {
  std::vector<std::size_t> ht(p.size(), 0);
  for (std::size_t e : p.linear_extension())
    for_each_bit(p.strictly_below(e), [&](std::size_t q) { ht[e] = std::max(ht[e], ht[q] + 1); });
  return ht;
}

/// An order isomorphism a -> b as an index map, if one exists.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& a, const Poset& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  auto signature = [](const Poset& p, std::size_t i) {
    return std::pair{popcount(p.below(i)), popcount(p.above(i))};
  };
  std::vector<std::size_t> map(n, n);
  Bits used = 0;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if ((used >> j) & 1U || signature(a, i) != signature(b, j)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = a.leq(k, i) == b.leq(map[k], j) && a.leq(i, k) == b.leq(j, map[k]);
      if (!ok) continue;
      map[i] = j;
      used |= bit(j);
      if (self(self, i + 1)) return true;
      used &= ~bit(j);
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

inline bool isomorphic(const Poset& a, const Poset& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace finstone
