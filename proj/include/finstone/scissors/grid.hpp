#pragma once

#include "finstone/error.hpp"
#include "finstone/lattice/lattice.hpp"
#include "finstone/matrix.hpp"
#include "finstone/motives/motives.hpp"

#include <set>
#include <string>
#include <vector>

namespace finstone {

/// Rectilinear grid in dimension 1 or 2 with exact rational cut coordinates.
/// Cells are the boxes between consecutive cuts, numbered x-fastest.
class GridGeometry {
 public:
  static GridGeometry validate(std::size_t dimension, std::vector<std::vector<BigRational>> cuts) {
    if (dimension != 1 && dimension != 2) fail(ErrorKind::InvalidInput, "grid dimension must be 1 or 2");
    if (cuts.size() != dimension) fail(ErrorKind::InvalidInput, "need one cut list per axis");
    std::size_t cells = 1;
    for (const auto& axis : cuts) {
      if (axis.size() < 2) fail(ErrorKind::InvalidInput, "each axis needs at least two cuts");
      for (std::size_t i = 1; i < axis.size(); ++i)
        if (!(axis[i - 1] < axis[i])) fail(ErrorKind::InvalidInput, "cuts must be strictly increasing");
      cells *= axis.size() - 1;
      if (cells > kMaxCarrier) fail(ErrorKind::TooLarge, "grids are limited to 64 cells");
    }
    GridGeometry g;
    g.dimension_ = dimension;
    g.cuts_ = std::move(cuts);
    g.cells_ = cells;
    return g;
  }

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t cell_count() const noexcept { return cells_; }
  const std::vector<std::vector<BigRational>>& cuts() const noexcept { return cuts_; }
  Bits all_cells() const { return low_bits(cells_); }

  std::string cell_name(std::size_t c) const { return "c" + std::to_string(c); }

  std::string polytope_label(Bits cells) const {
    if (cells == 0) return "0";
    std::string s;
    for_each_bit(cells, [&](std::size_t c) { s += (s.empty() ? "" : "+") + cell_name(c); });
    return s;
  }

  /// Area (length in 1D) of a union of cells.
  BigRational measure(Bits cells) const {
    BigRational total = 0;
    const std::size_t nx = cuts_[0].size() - 1;
    for_each_bit(cells, [&](std::size_t c) {
      BigRational m = cuts_[0][c % nx + 1] - cuts_[0][c % nx];
      if (dimension_ == 2) m *= cuts_[1][c / nx + 1] - cuts_[1][c / nx];
      total += m;
    });
    return total;
  }

 private:
  std::size_t dimension_ = 1;
  std::vector<std::vector<BigRational>> cuts_;
  std::size_t cells_ = 0;
};

/// Polytopes of a grid: unions of cells, with union and intersection as join
/// and meet (shared faces have measure zero).
struct PolytopeLattice {
  FinDistLattice lattice;
  std::vector<Bits> cells;  // cell set of each lattice element, canonical order
};

inline constexpr std::size_t kMaxGridLatticeCells = 16;

inline PolytopeLattice grid_lattice(const GridGeometry& g) {
  if (g.cell_count() > kMaxGridLatticeCells)
    fail(ErrorKind::TooLarge, "full polytope lattice is limited to 16 cells; use a generated sublattice");
  std::vector<std::string> names;
  std::vector<Bits> below;
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    names.push_back(g.cell_name(c));
    below.push_back(bit(c));
  }
  PolytopeLattice out;
  out.lattice = FinDistLattice::of_downsets(Poset::from_below_sets(names, below));
  std::vector<std::string> labels;
  for (Bits b : out.lattice.elements()) {
    out.cells.push_back(b);
    labels.push_back(g.polytope_label(b));
  }
  out.lattice = out.lattice.with_labels(std::move(labels));
  return out;
}

/// Closure of the generators and the empty polytope under union and intersection.
inline PolytopeLattice generated_sublattice(const GridGeometry& g, const std::vector<Bits>& gens) {
  std::set<Bits> family{0};
  for (Bits x : gens) {
    if (!subset_of(x, g.all_cells())) fail(ErrorKind::InvalidInput, "polytope uses a cell outside the grid");
    family.insert(x);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Bits> cur(family.begin(), family.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        grew |= family.insert(cur[i] | cur[j]).second;
        grew |= family.insert(cur[i] & cur[j]).second;
      }
  }
  const std::vector<Bits> members(family.begin(), family.end());
  std::vector<std::string> labels;
  for (Bits b : members) labels.push_back(g.polytope_label(b));
  ValidatedLattice v = from_set_family(members, labels);
  PolytopeLattice out{std::move(v.lattice), std::vector<Bits>(members.size())};
  for (std::size_t i = 0; i < members.size(); ++i) out.cells[v.renaming[i]] = members[i];
  return out;
}

/// A signed combination of polytope classes.
using PolytopeCombination = std::vector<std::pair<int, Bits>>;

struct PolytopeModuleReport {
  MotiveModule module;
  std::size_t rank = 0;  // number of sphere summands in the scissors K-theory
  std::vector<PolytopeCombination> basis;
};

inline PolytopeModuleReport polytope_module(const PolytopeLattice& pl) {
  PolytopeModuleReport r{MotiveModule::compute(pl.lattice), 0, {}};
  certify_free(r.module);
  point_basis_iso(r.module);
  r.rank = r.module.rank();
  const FinDistLattice& d = r.module.lattice();
  for (std::size_t p = 0; p < d.points().size(); ++p) {
    PolytopeCombination c{{1, pl.cells[d.point_element(p)]}};
    const std::size_t lo = d.point_lower_cover(p);
    if (lo != d.bottom()) c.emplace_back(-1, pl.cells[lo]);
    r.basis.push_back(std::move(c));
  }
  return r;
}

inline std::string format_combination(const GridGeometry& g, const PolytopeCombination& c) {
  std::string s;
  for (const auto& [coef, cells] : c) {
    if (s.empty())
      s += coef < 0 ? "-" : "";
    else
      s += coef < 0 ? " - " : " + ";
    s += "[" + g.polytope_label(cells) + "]";
  }
  return s;
}

}  // namespace finstone
