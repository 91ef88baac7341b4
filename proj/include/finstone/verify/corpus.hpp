#pragma once

#include "finstone/lattice/lattice.hpp"
#include "finstone/order/generate.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace finstone::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CorpusOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_exhaustive = 5;  // every poset up to this size
  std::size_t random = 200;        // extra seeded random lattices
  std::size_t max_random_points = 7;
  std::size_t max_random_elements = 32;
};

struct CorpusEntry {
  std::string name;
  std::shared_ptr<const FinDistLattice> lattice;
};

/// Random lattice O(P) with at most max_elements elements; posets whose
/// downset count exceeds the cap are redrawn.
template <class Rng>
FinDistLattice random_lattice(Rng& rng, std::size_t max_points, std::size_t max_elements) {
  std::uniform_int_distribution<std::size_t> size(1, max_points);
  for (;;) {
    const Poset p = random_poset(rng, size(rng));
    try {
      return FinDistLattice::of_downsets(p, max_elements);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
    }
  }
}

/// O(P) for every poset up to max_exhaustive elements (one per isomorphism
/// class), followed by the seeded random lattices.
inline std::vector<CorpusEntry> build_corpus(const CorpusOptions& opt) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 0; n <= opt.max_exhaustive; ++n) {
    const auto ps = all_posets(n);
    for (std::size_t i = 0; i < ps.size(); ++i)
      out.push_back({"poset" + std::to_string(n) + "." + std::to_string(i),
                     std::make_shared<const FinDistLattice>(FinDistLattice::of_downsets(ps[i]))});
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t k = 0; k < opt.random; ++k)
    out.push_back({"random." + std::to_string(k), std::make_shared<const FinDistLattice>(random_lattice(
                                                      rng, opt.max_random_points, opt.max_random_elements))});
  return out;
}

}  // namespace finstone::verify
