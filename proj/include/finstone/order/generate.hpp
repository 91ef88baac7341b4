#pragma once

#include "finstone/order/poset.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace finstone {

namespace detail {

inline std::vector<std::string> point_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

// Adjacency code of the relation after relabelling by perm.
inline std::uint64_t relation_code(const std::vector<Bits>& below, const std::vector<std::size_t>& perm) {
  const std::size_t n = below.size();
  std::uint64_t code = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if ((below[j] >> i) & 1U) code |= std::uint64_t{1} << (perm[i] * n + perm[j]);
  return code;
}

inline std::uint64_t canonical_code(const std::vector<Bits>& below) {
  std::vector<std::size_t> perm(below.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, relation_code(below, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

/// One representative of every isomorphism class of posets on n elements
/// (n <= 6), named p0..p{n-1}, in a fixed deterministic order.
inline std::vector<Poset> all_posets(std::size_t n) {
  if (n > 6) fail(ErrorKind::TooLarge, "exhaustive poset generation is limited to 6 elements");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<Poset> out;
  // Every poset has a natural labelling, so relations with i < j only suffice.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Bits> below(n);
    for (std::size_t i = 0; i < n; ++i) below[i] = bit(i);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) below[slots[s].second] |= bit(slots[s].first);
    bool transitive = true;
    for (std::size_t j = 0; j < n && transitive; ++j)
      for_each_bit(below[j], [&](std::size_t i) { transitive = transitive && subset_of(below[i], below[j]); });
    if (!transitive) continue;
    if (seen.insert(detail::canonical_code(below)).second)
      out.push_back(Poset::from_below_sets(detail::point_names(n), below));
  }
  return out;
}

/// Random poset on n elements: a random DAG compatible with a random
/// ordering, transitively closed.
template <class Rng>
Poset random_poset(Rng& rng, std::size_t n, double density = 0.35) {
  std::bernoulli_distribution edge(density);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Bits> below(n);
  for (std::size_t i = 0; i < n; ++i) below[i] = bit(i);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (edge(rng)) below[perm[j]] |= bit(perm[i]);
  // Closure in the order perm, where every edge points forward.
  for (std::size_t j = 0; j < n; ++j) {
    Bits acc = below[perm[j]];
    for_each_bit(below[perm[j]], [&](std::size_t i) { acc |= below[i]; });
    below[perm[j]] = acc;
  }
  return Poset::from_below_sets(detail::point_names(n), below);
}

}  // namespace finstone
