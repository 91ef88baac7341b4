#pragma once

#include "finstone/error.hpp"
#include "finstone/lattice/lattice.hpp"
#include "finstone/matrix.hpp"
#include "finstone/motives/abgroup.hpp"
#include "finstone/motives/motives.hpp"

#include <string>
#include <vector>

namespace finstone {

/// Chain X_0 <- X_1 <- ... <- X_k of finite sets with surjective transitions.
/// transitions[i][y] is the image in X_i of element y of X_{i+1}.
class InverseSystem {
 public:
  static InverseSystem validate(std::vector<std::vector<std::string>> stages,
                                std::vector<std::vector<std::size_t>> transitions) {
    if (stages.empty()) fail(ErrorKind::InvalidInput, "inverse system needs at least one stage");
    if (transitions.size() + 1 != stages.size())
      fail(ErrorKind::InvalidInput, "need exactly one transition between consecutive stages");
    for (const auto& s : stages)
      if (s.size() > kMaxCarrier) fail(ErrorKind::TooLarge, "stages are limited to 64 points");
    for (std::size_t i = 0; i < transitions.size(); ++i) {
      const auto& t = transitions[i];
      if (t.size() != stages[i + 1].size())
        fail(ErrorKind::InvalidInput, "transition " + std::to_string(i) + " is not total");
      Bits hit = 0;
      for (std::size_t y : t) {
        if (y >= stages[i].size()) fail(ErrorKind::InvalidInput, "transition " + std::to_string(i) + " leaves its target");
        hit |= bit(y);
      }
      if (hit != low_bits(stages[i].size())) fail(ErrorKind::NotSurjective, std::to_string(i));
    }
    InverseSystem s;
    s.stages_ = std::move(stages);
    s.transitions_ = std::move(transitions);
    return s;
  }

  std::size_t depth() const noexcept { return stages_.size() - 1; }
  std::size_t stage_size(std::size_t i) const { return stages_.at(i).size(); }
  const std::vector<std::string>& stage(std::size_t i) const { return stages_.at(i); }
  const std::vector<std::vector<std::string>>& stages() const noexcept { return stages_; }
  const std::vector<std::size_t>& transition(std::size_t i) const { return transitions_.at(i); }

  /// Preimage in X_{i+1} of a subset of X_i.
  Bits preimage(std::size_t i, Bits s) const {
    Bits out = 0;
    const auto& t = transitions_[i];
    for (std::size_t y = 0; y < t.size(); ++y)
      if ((s >> t[y]) & 1U) out |= bit(y);
    return out;
  }

  /// The subset of X_i whose preimage is s, if s is a union of fibres.
  std::optional<Bits> descend(std::size_t i, Bits s) const {
    Bits image = 0;
    const auto& t = transitions_[i];
    for (std::size_t y = 0; y < t.size(); ++y)
      if ((s >> y) & 1U) image |= bit(t[y]);
    if (preimage(i, image) != s) return std::nullopt;
    return image;
  }

  /// Precomposition with the transition X_{i+1} -> X_i on vectors indexed by X_i.
  template <class V>
  std::vector<V> pullback(std::size_t i, const std::vector<V>& f) const {
    std::vector<V> out;
    for (std::size_t y : transitions_[i]) out.push_back(f[y]);
    return out;
  }

  /// Matrix of pullback C(X_i; Z) -> C(X_{i+1}; Z).
  IntMatrix pullback_matrix(std::size_t i) const {
    IntMatrix m(stage_size(i + 1), stage_size(i));
    for (std::size_t y = 0; y < transitions_[i].size(); ++y) m(y, transitions_[i][y]) = 1;
    return m;
  }

 private:
  std::vector<std::vector<std::string>> stages_;
  std::vector<std::vector<std::size_t>> transitions_;
};

/// Element of colim P(X_i): a subset of some stage, identified with its
/// preimages at later stages.
struct ColimSubset {
  std::size_t stage = 0;
  Bits members = 0;
  friend bool operator==(const ColimSubset&, const ColimSubset&) = default;
};

/// The Boolean algebra colim_i P(X_i) with earliest-stage normal forms.
class ColimitBoolean {
 public:
  explicit ColimitBoolean(InverseSystem sys) : sys_(std::move(sys)) {}

  const InverseSystem& system() const noexcept { return sys_; }

  ColimSubset make(std::size_t stage, Bits members) const {
    if (stage > sys_.depth() || !subset_of(members, low_bits(sys_.stage_size(stage))))
      fail(ErrorKind::InvalidInput, "subset does not live on the given stage");
    return ColimSubset{stage, members};
  }

  ColimSubset lift(ColimSubset x, std::size_t stage) const {
    while (x.stage < stage) x = ColimSubset{x.stage + 1, sys_.preimage(x.stage, x.members)};
    return x;
  }

  /// Pushes x down to the earliest stage it is pulled back from.
  ColimSubset normalize(ColimSubset x) const {
    while (x.stage > 0) {
      auto down = sys_.descend(x.stage - 1, x.members);
      if (!down) break;
      x = ColimSubset{x.stage - 1, *down};
    }
    return x;
  }

  bool equal(const ColimSubset& a, const ColimSubset& b) const { return normalize(a) == normalize(b); }

  ColimSubset join(const ColimSubset& a, const ColimSubset& b) const { return combine(a, b, [](Bits x, Bits y) { return x | y; }); }
  ColimSubset meet(const ColimSubset& a, const ColimSubset& b) const { return combine(a, b, [](Bits x, Bits y) { return x & y; }); }
  ColimSubset complement(const ColimSubset& a) const {
    return normalize(ColimSubset{a.stage, ~a.members & low_bits(sys_.stage_size(a.stage))});
  }
  ColimSubset bottom() const { return ColimSubset{0, 0}; }
  ColimSubset top() const { return ColimSubset{0, low_bits(sys_.stage_size(0))}; }

 private:
  template <class Op>
  ColimSubset combine(const ColimSubset& a, const ColimSubset& b, Op op) const {
    const std::size_t s = std::max(a.stage, b.stage);
    return normalize(ColimSubset{s, op(lift(a, s).members, lift(b, s).members)});
  }

  InverseSystem sys_;
};

inline ColimitBoolean colimit_boolean(const InverseSystem& sys) { return ColimitBoolean(sys); }

/// Locally constant A-valued function: a vector of A-elements on one stage.
struct ColimFunction {
  std::size_t stage = 0;
  std::vector<IntVector> values;
  friend bool operator==(const ColimFunction&, const ColimFunction&) = default;
};

/// The group C(X; A) = colim_i Map(X_i, A).
class ContinuousFunctions {
 public:
  ContinuousFunctions(InverseSystem sys, AbGroup coeffs) : sys_(std::move(sys)), coeffs_(std::move(coeffs)) {}

  const AbGroup& coefficients() const noexcept { return coeffs_; }

  /// Group of functions factoring through stage i: A^{|X_i|}.
  AbGroup stage_group(std::size_t i) const { return power(coeffs_, sys_.stage_size(i)); }

  ColimFunction make(std::size_t stage, std::vector<IntVector> values) const {
    if (stage > sys_.depth() || values.size() != sys_.stage_size(stage))
      fail(ErrorKind::InvalidInput, "function does not live on the given stage");
    for (auto& v : values) v = coeffs_.reduce(std::move(v));
    return ColimFunction{stage, std::move(values)};
  }

  ColimFunction lift(ColimFunction f, std::size_t stage) const {
    while (f.stage < stage) f = ColimFunction{f.stage + 1, sys_.pullback(f.stage, f.values)};
    return f;
  }

  ColimFunction normalize(ColimFunction f) const {
    while (f.stage > 0) {
      const auto& t = sys_.transition(f.stage - 1);
      std::vector<IntVector> down(sys_.stage_size(f.stage - 1));
      std::vector<bool> seen(down.size(), false);
      bool constant = true;
      for (std::size_t y = 0; y < t.size() && constant; ++y) {
        if (!seen[t[y]]) {
          down[t[y]] = f.values[y];
          seen[t[y]] = true;
        } else if (down[t[y]] != f.values[y]) {
          constant = false;
        }
      }
      if (!constant) break;
      f = ColimFunction{f.stage - 1, std::move(down)};
    }
    return f;
  }

  ColimFunction add(const ColimFunction& a, const ColimFunction& b) const {
    const std::size_t s = std::max(a.stage, b.stage);
    ColimFunction x = lift(a, s), y = lift(b, s);
    for (std::size_t k = 0; k < x.values.size(); ++k) {
      for (std::size_t c = 0; c < coeffs_.components(); ++c) x.values[k][c] += y.values[k][c];
      x.values[k] = coeffs_.reduce(std::move(x.values[k]));
    }
    return normalize(std::move(x));
  }

  ColimFunction zero() const {
    return ColimFunction{0, std::vector<IntVector>(sys_.stage_size(0), IntVector(coeffs_.components(), 0))};
  }

 private:
  InverseSystem sys_;
  AbGroup coeffs_;
};

inline ContinuousFunctions continuous_functions(const InverseSystem& sys, const AbGroup& a) {
  return ContinuousFunctions(sys, a);
}

/// Powerset lattice of stage i, with points named after the stage elements.
inline FinDistLattice stage_powerset(const InverseSystem& sys, std::size_t i) {
  std::vector<Bits> below;
  for (std::size_t k = 0; k < sys.stage_size(i); ++k) below.push_back(bit(k));
  return FinDistLattice::of_downsets(Poset::from_below_sets(sys.stage(i), below));
}

/// Preimage along X_{i+1} -> X_i as a Boolean algebra hom P(X_i) -> P(X_{i+1}).
inline LatticeHom preimage_hom(const InverseSystem& sys, std::size_t i,
                               std::shared_ptr<const FinDistLattice> lo, std::shared_ptr<const FinDistLattice> hi) {
  LatticeHom f{lo, hi, {}, true};
  for (std::size_t u = 0; u < lo->size(); ++u) f.map.push_back(hi->index_of(sys.preimage(i, lo->bits(u))));
  return f;
}

struct StageComparison {
  std::size_t stage = 0;
  std::size_t motive_rank = 0;
  std::size_t function_rank = 0;
  IntMatrix indicator_on_snf;  // M(P(X_i)) -> C(X_i; Z), SNF basis
};

struct MotivesVsContinuousReport {
  bool ok = true;
  std::vector<StageComparison> stages;
  std::vector<bool> transition_injective;
  std::vector<bool> square_commutes;
  std::string detail;
};

/// M(P(X_i)) -> C(X_i; Z), U -> 1_U, is an isomorphism at every stage and
/// commutes with the maps induced by each transition.
inline MotivesVsContinuousReport motives_vs_continuous(const InverseSystem& sys) {
  MotivesVsContinuousReport r;
  std::vector<std::shared_ptr<const FinDistLattice>> lat;
  std::vector<MotiveModule> mods;
  for (std::size_t i = 0; i <= sys.depth(); ++i) {
    lat.push_back(std::make_shared<const FinDistLattice>(stage_powerset(sys, i)));
    mods.push_back(MotiveModule::compute(lat.back()));
    StageComparison c;
    c.stage = i;
    c.motive_rank = mods.back().rank();
    c.function_rank = sys.stage_size(i);
    try {
      c.indicator_on_snf = point_basis_iso(mods.back()).on_snf_basis;
    } catch (const Error& e) {
      r.ok = false;
      r.detail = "stage " + std::to_string(i) + ": " + e.what();
    }
    if (c.motive_rank != c.function_rank || !mods.back().torsion_free()) {
      r.ok = false;
      r.detail = "stage " + std::to_string(i) + ": rank mismatch";
    }
    r.stages.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < sys.depth(); ++i) {
    const IntMatrix pb = sys.pullback_matrix(i);
    const bool inj = rank(pb) == sys.stage_size(i);
    r.transition_injective.push_back(inj);
    // indicator(M(f)(x)) == pullback(indicator(x)) on the point bases
    const IntMatrix mf = motive_hom(preimage_hom(sys, i, lat[i], lat[i + 1]));
    const bool commutes = mf == pb;
    r.square_commutes.push_back(commutes);
    if (!inj || !commutes) {
      r.ok = false;
      r.detail = "transition " + std::to_string(i) + (inj ? ": square does not commute" : ": pullback not injective");
    }
  }
  return r;
}

struct ConstructibleStage {
  InverseSystem system;  // single discrete stage on the points of D
  Booleanization booleanization;
};

/// Finite stage of X^cons -> X: Bool(D) as a one-stage system on the points.
inline ConstructibleStage constructible_stage(const FinDistLattice& d) {
  return ConstructibleStage{InverseSystem::validate({d.points().names()}, {}), booleanize(d)};
}

}  // namespace finstone
