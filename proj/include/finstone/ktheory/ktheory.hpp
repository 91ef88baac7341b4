#pragma once

#include "finstone/error.hpp"
#include "finstone/lattice/lattice.hpp"
#include "finstone/motives/abgroup.hpp"
#include "finstone/motives/motives.hpp"
#include "finstone/profinite/profinite.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace finstone {

/// pi_n of the coefficient invariant on a finite window of degrees.
struct CoeffProfile {
  std::string label;
  int lo = 0;
  int hi = 0;
  std::map<int, AbGroup> groups;

  static CoeffProfile make(std::string label, int lo, int hi, std::map<int, AbGroup> groups) {
    if (lo > hi) fail(ErrorKind::InvalidInput, "profile window is empty");
    for (int n = lo; n <= hi; ++n)
      if (!groups.count(n)) fail(ErrorKind::InvalidInput, "profile has no group in degree " + std::to_string(n));
    for (const auto& [n, g] : groups) {
      if (n < lo || n > hi) fail(ErrorKind::InvalidInput, "profile group outside the window");
      if (!(AbGroup::make(g.rank, g.torsion) == g))
        fail(ErrorKind::InvalidInput, "profile group in degree " + std::to_string(n) + " is not in invariant factor form");
    }
    return CoeffProfile{std::move(label), lo, hi, std::move(groups)};
  }

  /// Degrees outside the window are unknown, never zero.
  std::optional<AbGroup> at(int n) const {
    if (n < lo || n > hi) return std::nullopt;
    return groups.at(n);
  }
};

/// K_0(S) = Z and K_1(S) = {+-1} = Z/2.
inline CoeffProfile sphere_k_profile() {
  return CoeffProfile::make("K(sphere), degrees 0..1", 0, 1, {{0, AbGroup::free(1)}, {1, AbGroup::cyclic(2)}});
}

inline CoeffProfile constant_profile(std::string label, AbGroup g) {
  return CoeffProfile::make(std::move(label), 0, 0, {{0, std::move(g)}});
}

struct KResult {
  int lo = 0;
  int hi = 0;
  std::map<int, AbGroup> groups;
  std::vector<std::string> routes;

  std::optional<AbGroup> at(int n) const {
    if (n < lo || n > hi) return std::nullopt;
    return groups.at(n);
  }
  friend bool operator==(const KResult& a, const KResult& b) {
    return a.lo == b.lo && a.hi == b.hi && a.groups == b.groups;
  }
};

/// Z^rank (x) A = A^rank.
inline AbGroup tensor_group(std::size_t rank, const AbGroup& a) { return power(a, rank); }

/// pi_n of the invariant on Sh(X) for X with compact opens D, given M(D).
inline KResult k_of_locally_coherent(const MotiveModule& m, const CoeffProfile& profile) {
  certify_free(m);
  KResult r{profile.lo, profile.hi, {}, {"motives"}};
  for (int n = profile.lo; n <= profile.hi; ++n) r.groups[n] = tensor_group(m.rank(), profile.groups.at(n));
  return r;
}

inline KResult k_of_locally_coherent(const FinDistLattice& d, const CoeffProfile& profile) {
  return k_of_locally_coherent(MotiveModule::compute(d), profile);
}

struct RouteReport {
  KResult coherent;       // M(D) (x) pi_n
  KResult boolean;        // M(Bool D) (x) pi_n
  KResult constructible;  // C(X^cons; pi_n) on the discrete stage
  KResult combined;
};

/// Runs the three routes and requires exact agreement in every degree.
/// The Booleanization module may be supplied when the caller caches it.
inline RouteReport coherent_vs_constructible(const FinDistLattice& d, const CoeffProfile& profile,
                                             const MotiveModule* bool_module = nullptr) {
  if (!d.has_top()) fail(ErrorKind::InvalidInput, "coherent_vs_constructible needs a bounded lattice");
  RouteReport r;
  r.coherent = k_of_locally_coherent(d, profile);
  const ConstructibleStage cs = constructible_stage(d);
  if (bool_module) {
    r.boolean = k_of_locally_coherent(*bool_module, profile);
  } else {
    r.boolean = k_of_locally_coherent(*cs.booleanization.boolean, profile);
  }
  r.boolean.routes = {"booleanization"};
  r.constructible = KResult{profile.lo, profile.hi, {}, {"constructible"}};
  for (int n = profile.lo; n <= profile.hi; ++n)
    r.constructible.groups[n] = continuous_functions(cs.system, profile.groups.at(n)).stage_group(0);
  for (int n = profile.lo; n <= profile.hi; ++n) {
    const AbGroup& a = r.coherent.groups.at(n);
    if (!(a == r.boolean.groups.at(n)) || !(a == r.constructible.groups.at(n)))
      fail(ErrorKind::RouteMismatch, "degree " + std::to_string(n) + ": " + a.to_string() + " / " +
                                         r.boolean.groups.at(n).to_string() + " / " +
                                         r.constructible.groups.at(n).to_string());
  }
  r.combined = r.coherent;
  r.combined.routes = {"motives", "booleanization", "constructible"};
  return r;
}

struct SemiorthogonalReport {
  KResult sum_over_points;
  KResult via_opens;
};

/// Sum over p in P of pi_n against pi_n of Sh on the Alexandroff opens of P.
inline SemiorthogonalReport semiorthogonal_rank_check(const Poset& p, const CoeffProfile& profile) {
  SemiorthogonalReport r;
  r.sum_over_points = KResult{profile.lo, profile.hi, {}, {"points"}};
  for (int n = profile.lo; n <= profile.hi; ++n) {
    AbGroup s;
    for (std::size_t i = 0; i < p.size(); ++i) s = direct_sum(s, profile.groups.at(n));
    r.sum_over_points.groups[n] = s;
  }
  r.via_opens = k_of_locally_coherent(birkhoff_opens(p), profile);
  if (!(r.sum_over_points == r.via_opens)) fail(ErrorKind::RouteMismatch, "sum over points differs from M(O(P))");
  return r;
}

}  // namespace finstone
