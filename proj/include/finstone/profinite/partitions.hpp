#pragma once

#include "finstone/error.hpp"
#include "finstone/order/poset.hpp"

#include <string>
#include <vector>

namespace finstone {

/// A partition of {0..n-1} as a list of nonempty blocks, each a bitset.
/// Blocks are ordered by their least element.
struct SetPartition {
  std::vector<Bits> blocks;

  std::size_t block_of(std::size_t s) const {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if ((blocks[b] >> s) & 1U) return b;
    return blocks.size();
  }
  /// Every block of *this lies inside a block of coarser.
  bool refines(const SetPartition& coarser) const {
    for (Bits b : blocks) {
      bool inside = false;
      for (Bits c : coarser.blocks) inside = inside || subset_of(b, c);
      if (!inside) return false;
    }
    return true;
  }
  /// Union of the blocks selected by a bitset over block indices.
  Bits union_of(Bits chosen) const {
    Bits u = 0;
    for_each_bit(chosen, [&](std::size_t b) { u |= blocks[b]; });
    return u;
  }
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// Coarsest common refinement.
inline SetPartition common_refinement(const SetPartition& a, const SetPartition& b) {
  SetPartition out;
  for (Bits x : a.blocks)
    for (Bits y : b.blocks)
      if (x & y) out.blocks.push_back(x & y);
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](Bits x, Bits y) { return std::countr_zero(x) < std::countr_zero(y); });
  return out;
}

inline constexpr std::size_t kMaxPartitionSet = 8;

/// All partitions of an n-set, in lexicographic order of restricted growth strings.
inline std::vector<SetPartition> all_partitions(std::size_t n) {
  if (n > kMaxPartitionSet) fail(ErrorKind::TooLarge, "partition enumeration is limited to 8 elements");
  std::vector<SetPartition> out;
  std::vector<std::size_t> rgs(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t blocks) -> void {
    if (i == n) {
      SetPartition p;
      p.blocks.assign(blocks, 0);
      for (std::size_t s = 0; s < n; ++s) p.blocks[rgs[s]] |= bit(s);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

struct PartitionReport {
  std::size_t set_size = 0;
  std::vector<SetPartition> partitions;
  std::size_t refinement_pairs = 0;  // comparable ordered pairs, reflexive included
  bool powerset_is_colimit = false;  // P(S) = colim over partitions of P(Pi)
  std::size_t beta_points = 0;       // points of lim over partitions of Pi
  std::string detail;
};

/// Enumerates the partitions of S ordered by refinement and checks the two
/// finite-stage facts about them: every subset U of S is represented in
/// colim P(Pi) by the block U of {U, U^c}, consistently with every other
/// representative, and the limit of the partitions has exactly |S| points.
inline PartitionReport finite_partitions(const std::vector<std::string>& set) {
  const std::size_t n = set.size();
  PartitionReport r;
  r.set_size = n;
  r.partitions = all_partitions(n);
  const auto& parts = r.partitions;
  for (const auto& a : parts)
    for (const auto& b : parts)
      if (a.refines(b)) ++r.refinement_pairs;

  const Bits all = low_bits(n);
  auto two_block = [&](Bits u) {
    SetPartition p;
    if (u != 0) p.blocks.push_back(u);
    if ((all & ~u) != 0) p.blocks.push_back(all & ~u);
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](Bits x, Bits y) { return std::countr_zero(x) < std::countr_zero(y); });
    return p;
  };
  // blocks of `fine` whose union is u, or nullopt if u is not a union of blocks
  auto restrict_to = [](const SetPartition& fine, Bits u) -> std::optional<Bits> {
    Bits chosen = 0;
    for (std::size_t b = 0; b < fine.blocks.size(); ++b) {
      if (subset_of(fine.blocks[b], u))
        chosen |= bit(b);
      else if (fine.blocks[b] & u)
        return std::nullopt;
    }
    return chosen;
  };
  r.powerset_is_colimit = true;
  for (const auto& p : parts) {
    for (Bits chosen = 0; chosen < (Bits{1} << p.blocks.size()); ++chosen) {
      const Bits u = p.union_of(chosen);
      const SetPartition q = two_block(u);
      Bits rep = 0;
      for (std::size_t b = 0; b < q.blocks.size(); ++b)
        if (q.blocks[b] == u) rep |= bit(b);
      // compare (p, chosen) with (q, rep) after pulling both back to p ^ q
      const SetPartition c = common_refinement(p, q);
      const auto from_p = restrict_to(c, p.union_of(chosen));
      const auto from_q = restrict_to(c, q.union_of(rep));
      if (!from_p || !from_q || *from_p != *from_q) {
        r.powerset_is_colimit = false;
        r.detail = "subset representatives disagree";
      }
    }
  }
  // A compatible family of blocks is determined by its block in the finest
  // partition, which is a singleton {s}.
  const SetPartition& finest = parts.empty() ? SetPartition{} : parts.back();
  for (std::size_t s = 0; s < finest.blocks.size(); ++s) {
    bool compatible = true;
    for (const auto& p : parts) {
      const std::size_t b = p.block_of(static_cast<std::size_t>(std::countr_zero(finest.blocks[s])));
      compatible = compatible && b < p.blocks.size() && subset_of(finest.blocks[s], p.blocks[b]);
    }
    if (compatible) ++r.beta_points;
  }
  return r;
}

}  // namespace finstone
