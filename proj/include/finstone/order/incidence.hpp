#pragma once

#include "finstone/matrix.hpp"
#include "finstone/order/poset.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace finstone {

/// Integer incidence algebra of a finite poset: functions on the pairs
/// (p, q) with p <= q, multiplied by convolution over intervals.
class IncidenceAlgebra {
 public:
  using Element = std::vector<BigInt>;  // indexed like basis_pairs()

  explicit IncidenceAlgebra(Poset p) : poset_(std::move(p)) {
    for (std::size_t a = 0; a < poset_.size(); ++a)
      for (std::size_t b : bit_indices(poset_.above(a))) {
        index_.emplace(std::pair{a, b}, pairs_.size());
        pairs_.emplace_back(a, b);
      }
  }

  const Poset& poset() const noexcept { return poset_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& basis_pairs() const noexcept { return pairs_; }
  std::size_t rank() const noexcept { return pairs_.size(); }
  std::size_t pair_index(std::size_t a, std::size_t b) const { return index_.at({a, b}); }

  Element zero() const { return Element(rank(), 0); }
  Element zeta() const { return Element(rank(), 1); }
  Element delta() const {
    Element d = zero();
    for (std::size_t a = 0; a < poset_.size(); ++a) d[pair_index(a, a)] = 1;
    return d;
  }

  /// (f*g)(p,r) = sum over p <= q <= r of f(p,q) g(q,r).
  Element multiply(const Element& f, const Element& g) const {
    Element h = zero();
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      const auto [p, r] = pairs_[k];
      for_each_bit(poset_.above(p) & poset_.below(r),
                   [&](std::size_t q) { h[k] += f[pair_index(p, q)] * g[pair_index(q, r)]; });
    }
    return h;
  }

  /// Convolution inverse of zeta via mu(p,p) = 1, mu(p,r) = -sum_{p<=q<r} mu(p,q).
  Element moebius() const {
    Element mu = zero();
    for (std::size_t p = 0; p < poset_.size(); ++p) {
      mu[pair_index(p, p)] = 1;
      for (std::size_t r : poset_.linear_extension()) {
        if (!poset_.lt(p, r)) continue;
        BigInt s = 0;
        for_each_bit(poset_.above(p) & poset_.strictly_below(r), [&](std::size_t q) { s += mu[pair_index(p, q)]; });
        mu[pair_index(p, r)] = -s;
      }
    }
    return mu;
  }

  const BigInt& at(const Element& f, std::size_t a, std::size_t b) const { return f[pair_index(a, b)]; }

 private:
  Poset poset_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
};

inline IncidenceAlgebra incidence_algebra(const Poset& p) { return IncidenceAlgebra(p); }

}  // namespace finstone
