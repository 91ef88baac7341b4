#pragma once

#include "finstone/error.hpp"
#include "finstone/lattice/lattice.hpp"
#include "finstone/matrix.hpp"
#include "finstone/motives/abgroup.hpp"
#include "finstone/snf.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace finstone {

/// Abelian group on `generator_count` generators modulo the rows of `relations`.
struct FPAbGroup {
  std::size_t generator_count = 0;
  IntMatrix relations;
};

inline constexpr std::size_t kMaxMotiveGenerators = 512;
inline constexpr std::size_t kMaxPresentationEntries = 10'000'000;

/// Presentation of M(D): one generator per nonzero element (generator g is
/// element g + 1, the bottom being [0] = 0) and one relation
/// [U] + [V] - [U v V] - [U ^ V] per incomparable pair. Comparable pairs give
/// trivial relations and are omitted.
inline FPAbGroup motives_presentation(const FinDistLattice& d) {
  const std::size_t n = d.size() - 1;
  if (n > kMaxMotiveGenerators)
    fail(ErrorKind::TooLarge, "M(D) presentation with " + std::to_string(n) + " generators exceeds the limit");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 1; a < d.size(); ++a)
    for (std::size_t b = a + 1; b < d.size(); ++b)
      if (!d.comparable(a, b)) pairs.emplace_back(a, b);
  if (pairs.size() * n > kMaxPresentationEntries)
    fail(ErrorKind::TooLarge, "M(D) relation matrix too large");
  FPAbGroup g{n, IntMatrix(pairs.size(), n)};
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const auto [a, b] = pairs[r];
    auto add = [&](std::size_t elem, int c) {
      if (elem != d.bottom()) g.relations(r, elem - 1) += c;
    };
    add(a, 1);
    add(b, 1);
    add(d.join(a, b), -1);
    add(d.meet(a, b), -1);
  }
  return g;
}

/// M(D) with its Smith normal form and the canonical point basis.
///
/// The point basis has one vector per join-irreducible p, namely
/// [p] - [p*] with p* the unique lower cover of p; in basis coordinates an
/// element U is the 0/1 indicator of the points below U. The SNF basis is
/// kept separately so the two routes can be compared.
class MotiveModule {
 public:
  static MotiveModule compute(std::shared_ptr<const FinDistLattice> d) {
    MotiveModule m;
    m.lattice_ = std::move(d);
    m.presentation_ = motives_presentation(*m.lattice_);
    m.snf_ = smith_normal_form(m.presentation_.relations, SnfTransforms::right);
    m.relation_rank_ = m.snf_.rank();
    return m;
  }
  static MotiveModule compute(const FinDistLattice& d) {
    return compute(std::make_shared<const FinDistLattice>(d));
  }

  const FinDistLattice& lattice() const noexcept { return *lattice_; }
  std::shared_ptr<const FinDistLattice> lattice_ptr() const noexcept { return lattice_; }
  const FPAbGroup& presentation() const noexcept { return presentation_; }
  const SnfResult& snf() const noexcept { return snf_; }
  std::size_t generator_count() const noexcept { return presentation_.generator_count; }
  std::size_t relation_rank() const noexcept { return relation_rank_; }
  bool torsion_free() const { return snf_.torsion_free(); }
  /// Free rank from the SNF route: generators minus rank of the relations.
  std::size_t rank() const noexcept { return generator_count() - relation_rank_; }
  std::size_t point_count() const noexcept { return lattice_->points().size(); }

  std::optional<std::size_t> generator_of(std::size_t element) const {
    if (element == lattice_->bottom()) return std::nullopt;
    return element - 1;
  }
  std::size_t element_of(std::size_t generator) const { return generator + 1; }

  /// Point basis vectors in generator coordinates.
  std::vector<IntVector> basis() const {
    std::vector<IntVector> out;
    const FinDistLattice& d = *lattice_;
    for (std::size_t p = 0; p < point_count(); ++p) {
      IntVector v(generator_count(), 0);
      v[d.point_element(p) - 1] += 1;
      if (auto g = generator_of(d.point_lower_cover(p))) v[*g] -= 1;
      out.push_back(std::move(v));
    }
    return out;
  }

  /// universal valuation in point basis coordinates.
  IntVector mu_univ(std::size_t element) const {
    IntVector v(point_count(), 0);
    for_each_bit(lattice_->bits(element), [&](std::size_t p) { v[p] = 1; });
    return v;
  }

  /// Generator-coordinate vector -> point basis coordinates.
  IntVector express(const IntVector& x) const {
    IntVector v(point_count(), 0);
    for (std::size_t g = 0; g < x.size(); ++g) {
      if (x[g] == 0) continue;
      for_each_bit(lattice_->bits(element_of(g)), [&](std::size_t p) { v[p] += x[g]; });
    }
    return v;
  }

  /// Generator-coordinate vector -> coordinates on the free part of the SNF
  /// quotient, i.e. (x * rightV) restricted to the columns past the relation rank.
  IntVector snf_coords(const IntVector& x) const {
    IntVector y(rank(), 0);
    for (std::size_t g = 0; g < x.size(); ++g) {
      if (x[g] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) y[j] += x[g] * snf_.rightV(g, relation_rank_ + j);
    }
    return y;
  }

  /// SNF basis vectors in generator coordinates (rows of rightV^-1).
  std::vector<IntVector> snf_basis() const {
    std::vector<IntVector> out;
    for (std::size_t j = 0; j < rank(); ++j) out.push_back(snf_.rightVinv.row(relation_rank_ + j));
    return out;
  }

  /// Generator-coordinate vector of [U] (zero for the bottom).
  IntVector generator_vector(std::size_t element) const {
    IntVector v(generator_count(), 0);
    if (auto g = generator_of(element)) v[*g] = 1;
    return v;
  }

  /// Product of generator-coordinate vectors, bilinear in [U][V] = [U ^ V].
  IntVector multiply_generators(const IntVector& x, const IntVector& y) const {
    IntVector z(generator_count(), 0);
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < y.size(); ++b) {
        if (y[b] == 0) continue;
        if (auto g = generator_of(lattice_->meet(element_of(a), element_of(b)))) z[*g] += x[a] * y[b];
      }
    }
    return z;
  }

  /// ring_table()[p][q] is b_p * b_q in point basis coordinates.
  std::vector<std::vector<IntVector>> ring_table() const {
    const auto b = basis();
    std::vector<std::vector<IntVector>> t(b.size());
    for (std::size_t p = 0; p < b.size(); ++p)
      for (std::size_t q = 0; q < b.size(); ++q) t[p].push_back(express(multiply_generators(b[p], b[q])));
    return t;
  }

 private:
  std::shared_ptr<const FinDistLattice> lattice_;
  FPAbGroup presentation_;
  SnfResult snf_;
  std::size_t relation_rank_ = 0;
};

struct FreenessReport {
  std::size_t rank = 0;
  std::size_t generators = 0;
  std::size_t relation_rank = 0;
  std::vector<BigInt> diag;
};

/// Passes iff no SNF diagonal entry exceeds 1; throws TorsionFound otherwise.
inline FreenessReport certify_free(const MotiveModule& m) {
  FreenessReport r{m.rank(), m.generator_count(), m.relation_rank(), m.snf().diag};
  if (!m.torsion_free()) {
    std::string s;
    for (const auto& d : m.snf().torsion()) s += (s.empty() ? "" : ",") + d.str();
    fail(ErrorKind::TorsionFound, "invariant factors " + s);
  }
  return r;
}

struct PointBasisIso {
  IntMatrix generator_images;  // points x generators: indicator of each [U]
  IntMatrix on_snf_basis;      // points x rank: the indicator map on the SNF basis
};

/// The indicator map [U] -> (1 if p <= U)_p into Z^points. Checked to kill
/// every relation and to be unimodular on the SNF basis, which makes it an
/// independent certificate for rank M(D) = number of points.
inline PointBasisIso point_basis_iso(const MotiveModule& m) {
  const FinDistLattice& d = m.lattice();
  const std::size_t pts = m.point_count();
  PointBasisIso out{IntMatrix(pts, m.generator_count()), IntMatrix(pts, m.rank())};
  for (std::size_t g = 0; g < m.generator_count(); ++g)
    for_each_bit(d.bits(m.element_of(g)), [&](std::size_t p) { out.generator_images(p, g) = 1; });
  const IntMatrix& rel = m.presentation().relations;
  if (!(out.generator_images * rel.transpose()).is_zero())
    fail(ErrorKind::NotUnimodular, "indicator map does not kill the modularity relations");
  const auto sb = m.snf_basis();
  for (std::size_t j = 0; j < sb.size(); ++j) {
    const IntVector img = out.generator_images * sb[j];
    for (std::size_t p = 0; p < pts; ++p) out.on_snf_basis(p, j) = img[p];
  }
  if (!is_unimodular(out.on_snf_basis))
    fail(ErrorKind::NotUnimodular, "indicator map on the SNF basis is not invertible over Z (" +
                                       std::to_string(pts) + " points, rank " + std::to_string(m.rank()) + ")");
  return out;
}

/// Matrix of M(f) on point bases (rows: target points, columns: source
/// points), from [U] -> [f(U)]: column p is ind(f(p)) - ind(f(p*)).
inline IntMatrix motive_hom(const LatticeHom& f) {
  if (auto rep = check_hom(f); !rep.ok) fail(ErrorKind::NotAHom, rep.violation);
  const FinDistLattice& s = *f.source;
  const FinDistLattice& t = *f.target;
  IntMatrix out(t.points().size(), s.points().size());
  for (std::size_t p = 0; p < s.points().size(); ++p) {
    for_each_bit(t.bits(f(s.point_element(p))), [&](std::size_t q) { out(q, p) += 1; });
    for_each_bit(t.bits(f(s.point_lower_cover(p))), [&](std::size_t q) { out(q, p) -= 1; });
  }
  return out;
}

/// Matrix of M(f) between the SNF bases of the two modules.
inline IntMatrix motive_hom_snf(const LatticeHom& f, const MotiveModule& src, const MotiveModule& dst) {
  if (auto rep = check_hom(f); !rep.ok) fail(ErrorKind::NotAHom, rep.violation);
  const auto sb = src.snf_basis();
  IntMatrix out(dst.rank(), src.rank());
  for (std::size_t j = 0; j < sb.size(); ++j) {
    IntVector pushed(dst.generator_count(), 0);
    for (std::size_t g = 0; g < sb[j].size(); ++g)
      if (sb[j][g] != 0)
        if (auto h = dst.generator_of(f(src.element_of(g)))) pushed[*h] += sb[j][g];
    const IntVector y = dst.snf_coords(pushed);
    for (std::size_t i = 0; i < y.size(); ++i) out(i, j) = y[i];
  }
  return out;
}

struct SplitTopReport {
  std::size_t rank = 0;           // rank M(D)
  std::size_t extended_rank = 0;  // rank M(D_inf)
  IntMatrix inclusion;            // M(D) -> M(D_inf)
  IntMatrix to_two;               // M(D_inf) -> M(2)
  IntMatrix from_two;             // M(2) -> M(D_inf)
  IntMatrix retraction;           // M(D_inf) -> M(D), left inverse of inclusion killing from_two
};

/// M(D_inf) = M(D) + Z, realised by the homs D -> D_inf -> 2 and 2 -> D_inf.
inline SplitTopReport split_top(const FinDistLattice& d) {
  const TopAdjunction adj = add_top(d);
  const MotiveModule md = MotiveModule::compute(d);
  const MotiveModule mx = MotiveModule::compute(adj.extended);
  SplitTopReport r;
  r.rank = md.rank();
  r.extended_rank = mx.rank();
  r.inclusion = motive_hom(adj.inclusion);
  r.to_two = motive_hom(adj.to_two);
  r.from_two = motive_hom(adj.from_two);
  auto bad = [](const std::string& why) { fail(ErrorKind::SplitFailure, why); };
  if (r.extended_rank != r.rank + 1) bad("rank M(D_inf) != rank M(D) + 1");
  if (!(r.to_two * r.from_two == IntMatrix::identity(1))) bad("2 -> D_inf -> 2 is not the identity on M(2)");
  if (!(r.to_two * r.inclusion).is_zero()) bad("D -> D_inf -> 2 is not zero on motives");
  const std::size_t n = r.inclusion.rows();
  IntMatrix block(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) block(i, j) = r.inclusion(i, j);
    block(i, n - 1) = r.from_two(i, 0);
  }
  const auto inv = integer_inverse(block);
  if (!inv) bad("M(D) + M(2) -> M(D_inf) is not an isomorphism");
  r.retraction = IntMatrix(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.retraction(i, j) = (*inv)(i, j);
  if (!(r.retraction * r.inclusion == IntMatrix::identity(n - 1))) bad("retraction is not a left inverse");
  if (!(r.retraction * r.from_two).is_zero()) bad("retraction does not kill the new summand");
  return r;
}

struct BooleanizationIsoReport {
  IntMatrix on_points;  // M(D) -> M(Bool D) on point bases
  IntMatrix on_snf;     // the same map on SNF bases
  std::size_t rank = 0;
};

/// M(D) -> M(Bool D) is an isomorphism, checked on both bases.
inline BooleanizationIsoReport booleanization_iso(const MotiveModule& md, const MotiveModule& mb,
                                                  const LatticeHom& hom) {
  BooleanizationIsoReport r{motive_hom(hom), motive_hom_snf(hom, md, mb), md.rank()};
  if (!is_unimodular(r.on_points)) fail(ErrorKind::NotIso, "point-basis matrix is not unimodular");
  if (!is_unimodular(r.on_snf)) fail(ErrorKind::NotIso, "SNF-basis matrix is not unimodular");
  return r;
}

inline BooleanizationIsoReport booleanization_iso(const FinDistLattice& d) {
  const Booleanization b = booleanize(d);
  return booleanization_iso(MotiveModule::compute(b.hom.source), MotiveModule::compute(b.boolean), b.hom);
}

// ---------------------------------------------------------------------------
// Valuations

/// Values of a candidate valuation, one group element per lattice element.
struct ValuationData {
  AbGroup target;
  std::vector<IntVector> values;
};

inline bool is_valuation(const FinDistLattice& d, const ValuationData& v) {
  if (v.values.size() != d.size()) return false;
  const AbGroup& a = v.target;
  auto norm = [&](const IntVector& x) { return a.reduce(x); };
  if (norm(v.values[d.bottom()]) != IntVector(a.components(), 0)) return false;
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = x + 1; y < d.size(); ++y) {
      IntVector lhs(a.components()), rhs(a.components());
      for (std::size_t c = 0; c < a.components(); ++c) {
        lhs[c] = v.values[x][c] + v.values[y][c];
        rhs[c] = v.values[d.join(x, y)][c] + v.values[d.meet(x, y)][c];
      }
      if (norm(lhs) != norm(rhs)) return false;
    }
  return true;
}

/// The unique homomorphism h : M(D) -> A with h(mu_univ(U)) = v(U), as a
/// matrix (A components x point basis). Each basis vector b_p equals
/// mu_univ(p) - mu_univ(p*), so h(b_p) = v(p) - v(p*) is forced.
inline IntMatrix factor_valuation(const MotiveModule& m, const ValuationData& v) {
  const FinDistLattice& d = m.lattice();
  if (!is_valuation(d, v)) fail(ErrorKind::NotAValuation, "values violate v(0) = 0 or modularity");
  const AbGroup& a = v.target;
  IntMatrix h(a.components(), m.point_count());
  for (std::size_t p = 0; p < m.point_count(); ++p) {
    const std::size_t up = d.point_element(p), lo = d.point_lower_cover(p);
    // certificate that b_p lies in the span of the universal valuation
    IntVector e = m.mu_univ(up);
    const IntVector low = m.mu_univ(lo);
    for (std::size_t q = 0; q < e.size(); ++q) e[q] -= low[q];
    for (std::size_t q = 0; q < e.size(); ++q)
      if (e[q] != (q == p ? 1 : 0)) fail(ErrorKind::NotUnimodular, "point basis not reached by mu_univ");
    IntVector col(a.components());
    for (std::size_t c = 0; c < a.components(); ++c) col[c] = v.values[up][c] - v.values[lo][c];
    col = a.reduce(col);
    for (std::size_t c = 0; c < a.components(); ++c) h(c, p) = col[c];
  }
  return h;
}

/// Applies a factored homomorphism to mu_univ(U), reduced in the target.
inline IntVector apply_factor(const MotiveModule& m, const IntMatrix& h, const AbGroup& a, std::size_t element) {
  return a.reduce(h * m.mu_univ(element));
}

// ---------------------------------------------------------------------------
// Ring structure

struct RingReport {
  std::vector<std::vector<IntVector>> table;
  std::optional<std::size_t> unit_element;  // the top, when D is bounded
};

/// Bilinear extension of [U][V] = [U ^ V]. Checks that the product kills the
/// relations (via SNF coordinates, independent of the point basis), that it
/// is commutative and associative on the basis, that every mu_univ(U) is
/// idempotent, and that [1] is a unit when D is bounded.
inline RingReport ring_structure(const MotiveModule& m) {
  const FinDistLattice& d = m.lattice();
  auto bad = [](const std::string& why) { fail(ErrorKind::IllDefinedProduct, why); };
  const IntMatrix& rel = m.presentation().relations;
  for (std::size_t r = 0; r < rel.rows(); ++r) {
    const IntVector row = rel.row(r);
    for (std::size_t g = 0; g < m.generator_count(); ++g) {
      const IntVector prod = m.multiply_generators(row, m.generator_vector(m.element_of(g)));
      for (const auto& c : m.snf_coords(prod))
        if (c != 0) bad("relation " + std::to_string(r) + " times [" + d.label(m.element_of(g)) + "] is nonzero");
    }
  }
  RingReport out{m.ring_table(), std::nullopt};
  const auto& t = out.table;
  const std::size_t n = m.point_count();
  auto mul = [&](const IntVector& x, const IntVector& y) {
    IntVector z(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) z[k] += x[i] * y[j] * t[i][j][k];
      }
    }
    return z;
  };
  auto unit = [n](std::size_t i) {
    IntVector e(n, 0);
    e[i] = 1;
    return e;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i][j] != t[j][i]) bad("product not commutative");
      for (std::size_t k = 0; k < n; ++k)
        if (mul(t[i][j], unit(k)) != mul(unit(i), t[j][k])) bad("product not associative");
    }
  for (std::size_t u = 0; u < d.size(); ++u) {
    const IntVector x = m.mu_univ(u);
    if (mul(x, x) != x) bad("mu_univ(" + d.label(u) + ") is not idempotent");
  }
  if (d.has_top() && d.size() > 1) {
    const IntVector one = m.mu_univ(d.top());
    for (std::size_t i = 0; i < n; ++i)
      if (mul(one, unit(i)) != unit(i)) bad("[1] is not a unit");
    out.unit_element = d.top();
  }
  return out;
}

}  // namespace finstone
