#pragma once

#include "finstone/error.hpp"
#include "finstone/matrix.hpp"
#include "finstone/snf.hpp"

#include <string>
#include <vector>

namespace finstone {

/// Finitely generated abelian group Z^rank + Z/d1 + ... + Z/dk in invariant
/// factor form: every d > 1 and d_i | d_{i+1}.
struct AbGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  /// Normalizes an arbitrary list of cyclic orders (entries >= 1).
  static AbGroup make(std::size_t rank, const std::vector<BigInt>& cyclic_orders) {
    AbGroup g;
    g.rank = rank;
    if (cyclic_orders.empty()) return g;
    IntMatrix d(cyclic_orders.size(), cyclic_orders.size());
    for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
      if (cyclic_orders[i] < 1) fail(ErrorKind::InvalidInput, "cyclic orders must be positive");
      d(i, i) = cyclic_orders[i];
    }
    g.torsion = smith_normal_form(d, SnfTransforms::none).torsion();
    return g;
  }

  static AbGroup free(std::size_t rank) { return AbGroup{rank, {}}; }
  static AbGroup cyclic(const BigInt& n) { return n == 0 ? free(1) : make(0, {n}); }

  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::size_t components() const { return rank + torsion.size(); }

  /// Reduces an element given in (free coords, torsion coords) form.
  std::vector<BigInt> reduce(std::vector<BigInt> x) const {
    if (x.size() != components()) fail(ErrorKind::InvalidInput, "group element has the wrong number of coordinates");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      BigInt& c = x[rank + i];
      c %= torsion[i];
      if (c < 0) c += torsion[i];
    }
    return x;
  }

  friend AbGroup direct_sum(const AbGroup& a, const AbGroup& b) {
    std::vector<BigInt> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    return make(a.rank + b.rank, t);
  }

  friend bool operator==(const AbGroup&, const AbGroup&) = default;

  std::string to_string() const {
    if (trivial()) return "0";
    std::string s;
    if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    for (const auto& d : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + d.str();
    return s;
  }
};

/// A^k.
inline AbGroup power(const AbGroup& a, std::size_t k) {
  AbGroup out;
  for (std::size_t i = 0; i < k; ++i) out = direct_sum(out, a);
  return out;
}

}  // namespace finstone
