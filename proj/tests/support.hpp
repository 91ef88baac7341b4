#pragma once

#include "finstone/finstone.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace fixtures {

using namespace finstone;

inline Poset antichain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Bits> below;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    below.push_back(bit(i));
  }
  return Poset::from_below_sets(names, below);
}

inline Poset chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Bits> below;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    below.push_back(low_bits(i + 1));
  }
  return Poset::from_below_sets(names, below);
}

/// {0, U, V, 1} with U, V incomparable.
inline FinDistLattice diamond() { return FinDistLattice::of_downsets(antichain(2)).with_labels({"0", "U", "V", "1"}); }

/// {0 < a < 1}.
inline FinDistLattice chain3() { return FinDistLattice::of_downsets(chain(2)).with_labels({"0", "a", "1"}); }

inline FinDistLattice two() { return two_lattice(); }

inline FinDistLattice trivial() { return FinDistLattice::of_downsets(Poset::from_below_sets({}, {})); }

inline std::shared_ptr<const FinDistLattice> share(FinDistLattice d) {
  return std::make_shared<const FinDistLattice>(std::move(d));
}

inline ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

inline IntVector iv(std::initializer_list<long long> xs) {
  IntVector v;
  for (long long x : xs) v.push_back(BigInt(x));
  return v;
}

}  // namespace fixtures
