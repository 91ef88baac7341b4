#pragma once

// JSON documents for every input and report type. Inputs accept an optional
// "schemaVersion" (must be 1 when present); outputs always carry it.

#include "finstone/finstone.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>
#include <set>
#include <map>
#include <string>
#include <vector>

namespace finstone::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

[[noreturn]] inline void bad(const std::string& what) { fail(ErrorKind::InvalidInput, what); }

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::string str(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline std::vector<std::string> str_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(str(x, what));
  return out;
}

inline BigInt integer(const Json& j, const char* what) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  bad(std::string(what) + " must be an integer");
}

inline void check_version(const Json& j) {
  if (j.is_object() && j.contains("schemaVersion") && j.at("schemaVersion") != kSchemaVersion)
    bad("unsupported schemaVersion");
}

}  // namespace detail

inline Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

inline Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

// --- posets ---------------------------------------------------------------

inline Poset poset_from_json(const Json& j) {
  detail::check_version(j);
  RawPoset raw;
  raw.elements = detail::str_list(detail::field(j, "elements"), "elements");
  raw.reflexive_implicit = true;
  const Json& leq = detail::field(j, "leq");
  if (!leq.is_array()) detail::bad("leq must be an array");
  for (const auto& pr : leq) {
    if (!pr.is_array() || pr.size() != 2) detail::bad("leq entries must be pairs");
    raw.leq.emplace_back(detail::str(pr[0], "leq entry"), detail::str(pr[1], "leq entry"));
  }
  return Poset::validate(raw);
}

inline Json to_json(const Poset& p) {
  Json j;
  j["elements"] = p.names();
  Json leq = Json::array();
  for (const auto& [a, b] : p.strict_pairs()) leq.push_back({p.name(a), p.name(b)});
  j["leq"] = leq;
  return j;
}

inline Json downset_json(const Poset& p, Bits members) {
  Json a = Json::array();
  for_each_bit(members, [&](std::size_t i) { a.push_back(p.name(i)); });
  return a;
}

// --- lattices -------------------------------------------------------------

inline FinDistLattice lattice_from_json(const Json& j, std::size_t budget = kDefaultEnumerationBudget) {
  detail::check_version(j);
  if (j.is_object() && j.contains("posetOfIrreducibles")) {
    FinDistLattice d = FinDistLattice::of_downsets(poset_from_json(j.at("posetOfIrreducibles")), budget);
    if (j.contains("labels")) d = d.with_labels(detail::str_list(j.at("labels"), "labels"));
    if (j.contains("hasTop")) {
      if (!j.at("hasTop").is_boolean()) detail::bad("hasTop must be a boolean");
      d = d.with_top(j.at("hasTop").get<bool>());
    }
    return d;
  }
  LatticeTables t;
  t.elements = detail::str_list(detail::field(j, "elements"), "elements");
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < t.elements.size(); ++i)
    if (!idx.emplace(t.elements[i], i).second) fail(ErrorKind::DuplicateElement, t.elements[i]);
  auto lookup = [&](const Json& x) {
    const std::string s = detail::str(x, "table entry");
    auto it = idx.find(s);
    if (it == idx.end()) fail(ErrorKind::UnknownElement, s);
    return it->second;
  };
  auto table = [&](const char* key) {
    std::vector<std::vector<std::size_t>> tab;
    const Json& rows = detail::field(j, key);
    if (!rows.is_array()) detail::bad(std::string(key) + " must be an array of rows");
    for (const auto& row : rows) {
      if (!row.is_array()) detail::bad(std::string(key) + " rows must be arrays");
      std::vector<std::size_t> r;
      for (const auto& x : row) r.push_back(lookup(x));
      tab.push_back(std::move(r));
    }
    return tab;
  };
  t.join = table("join");
  t.meet = table("meet");
  t.bottom = lookup(detail::field(j, "bottom"));
  if (j.contains("top") && !j.at("top").is_null()) t.top = lookup(j.at("top"));
  return from_tables(t).lattice;
}

inline Json to_json(const FinDistLattice& d) {
  Json j;
  j["posetOfIrreducibles"] = to_json(d.points());
  j["labels"] = d.labels();
  Json ds = Json::array();
  for (Bits b : d.elements()) ds.push_back(downset_json(d.points(), b));
  j["downsets"] = ds;
  j["hasTop"] = d.has_top();
  return j;
}

inline LatticeHom hom_from_json(const Json& j, std::size_t budget = kDefaultEnumerationBudget) {
  detail::check_version(j);
  auto src = std::make_shared<const FinDistLattice>(lattice_from_json(detail::field(j, "source"), budget));
  auto dst = std::make_shared<const FinDistLattice>(lattice_from_json(detail::field(j, "target"), budget));
  LatticeHom f{src, dst, std::vector<std::size_t>(src->size(), dst->size()), false};
  if (j.contains("bounded")) f.bounded = j.at("bounded").get<bool>();
  const Json& m = detail::field(j, "map");
  if (!m.is_object()) detail::bad("map must be an object");
  for (const auto& [k, v] : m.items()) f.map[src->index_of_label(k)] = dst->index_of_label(detail::str(v, "map value"));
  for (std::size_t i = 0; i < f.map.size(); ++i)
    if (f.map[i] == dst->size()) detail::bad("map is not total: missing " + src->label(i));
  return f;
}

inline Json to_json(const LatticeHom& f) {
  Json j;
  j["source"] = to_json(*f.source);
  j["target"] = to_json(*f.target);
  Json m = Json::object();
  for (std::size_t i = 0; i < f.map.size(); ++i) m[f.source->label(i)] = f.target->label(f.map[i]);
  j["map"] = m;
  j["bounded"] = f.bounded;
  return j;
}

// --- sites ----------------------------------------------------------------

inline FinSite site_from_json(const Json& j, std::size_t budget = kDefaultEnumerationBudget) {
  detail::check_version(j);
  if (j.is_object() && j.contains("lattice")) {
    const std::string cov = j.contains("coverage") ? detail::str(j.at("coverage"), "coverage") : "fin";
    if (cov != "fin") detail::bad("only the \"fin\" coverage can be generated from a lattice");
    return fin_coverage(lattice_from_json(j.at("lattice"), budget));
  }
  RawSite raw{poset_from_json(detail::field(j, "poset")), {}};
  const Json& covs = detail::field(j, "coverings");
  if (!covs.is_array()) detail::bad("coverings must be an array");
  for (const auto& c : covs) {
    Covering cv;
    cv.target = raw.carrier.require(detail::str(detail::field(c, "target"), "target"));
    for (const auto& x : detail::str_list(detail::field(c, "family"), "family")) cv.family.push_back(raw.carrier.require(x));
    raw.coverings.push_back(std::move(cv));
  }
  return validate_site(std::move(raw));
}

inline DownSet downset_from_json(const Poset& carrier, const Json& j) {
  detail::check_version(j);
  Bits b = 0;
  for (const auto& x : detail::str_list(detail::field(j, "members"), "members")) b |= bit(carrier.require(x));
  if (!carrier.is_downset(b)) detail::bad("members are not downward closed");
  return DownSet{b};
}

// --- groups and valuations ------------------------------------------------

inline AbGroup group_from_json(const Json& j) {
  const Json& r = detail::field(j, "rank");
  if (!r.is_number_unsigned()) detail::bad("rank must be a non-negative integer");
  std::vector<BigInt> tors;
  if (j.contains("torsion")) {
    if (!j.at("torsion").is_array()) detail::bad("torsion must be an array");
    for (const auto& d : j.at("torsion")) tors.push_back(detail::integer(d, "torsion entry"));
  }
  AbGroup g{r.get<std::size_t>(), tors};
  if (!(AbGroup::make(g.rank, tors) == g)) detail::bad("torsion must be invariant factors d1 | d2 | ... with every d > 1");
  return g;
}

inline Json to_json(const AbGroup& g) {
  Json j;
  j["rank"] = g.rank;
  Json t = Json::array();
  for (const auto& d : g.torsion) t.push_back(to_json(d));
  j["torsion"] = t;
  j["group"] = g.to_string();
  return j;
}

inline ValuationData valuation_from_json(const FinDistLattice& d, const Json& j) {
  detail::check_version(j);
  ValuationData v;
  v.target = group_from_json(detail::field(j, "target"));
  v.values.assign(d.size(), IntVector(v.target.components(), 0));
  const Json& vals = detail::field(j, "values");
  if (!vals.is_object()) detail::bad("values must be an object");
  std::vector<bool> seen(d.size(), false);
  for (const auto& [k, arr] : vals.items()) {
    const std::size_t e = d.index_of_label(k);
    if (!arr.is_array() || arr.size() != v.target.components()) detail::bad("value of " + k + " has the wrong length");
    for (std::size_t c = 0; c < arr.size(); ++c) v.values[e][c] = detail::integer(arr[c], "value");
    seen[e] = true;
  }
  for (std::size_t e = 0; e < d.size(); ++e)
    if (!seen[e]) detail::bad("no value for " + d.label(e));
  return v;
}

// --- motive reports ---------------------------------------------------------

inline Json motive_report(const MotiveModule& m, bool include_ring) {
  const FinDistLattice& d = m.lattice();
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["rank"] = m.rank();
  Json basis = Json::array(), vectors = Json::array();
  for (std::size_t p = 0; p < m.point_count(); ++p) {
    basis.push_back(d.label(d.point_element(p)));
    const std::size_t lo = d.point_lower_cover(p);
    vectors.push_back({{"plus", d.label(d.point_element(p))}, {"minus", lo == d.bottom() ? Json() : Json(d.label(lo))}});
  }
  j["basis"] = basis;
  j["basisVectors"] = vectors;
  Json mu = Json::object();
  for (std::size_t u = 0; u < d.size(); ++u) mu[d.label(u)] = to_json(m.mu_univ(u));
  j["muUniv"] = mu;
  if (include_ring) {
    Json rt = Json::array();
    for (const auto& row : ring_structure(m).table) {
      Json r = Json::array();
      for (const auto& c : row) r.push_back(to_json(c));
      rt.push_back(r);
    }
    j["ringTable"] = rt;
  }
  Json diag = Json::array();
  for (const auto& x : m.snf().diag) diag.push_back(to_json(x));
  j["snfDiag"] = diag;
  j["generators"] = m.generator_count();
  j["relations"] = m.presentation().relations.rows();
  return j;
}

// --- coefficient profiles and K-groups -----------------------------------

inline CoeffProfile profile_from_json(const Json& j) {
  detail::check_version(j);
  const std::string label = j.contains("label") ? detail::str(j.at("label"), "label") : "";
  const Json& w = detail::field(j, "window");
  if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer())
    detail::bad("window must be [lo, hi]");
  std::map<int, AbGroup> groups;
  const Json& g = detail::field(j, "groups");
  if (!g.is_object()) detail::bad("groups must be an object keyed by degree");
  for (const auto& [k, v] : g.items()) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      detail::bad("degree keys must be integers");
    }
    groups[n] = group_from_json(v);
  }
  return CoeffProfile::make(label, w[0].get<int>(), w[1].get<int>(), groups);
}

inline Json to_json(const CoeffProfile& p) {
  Json j;
  j["label"] = p.label;
  j["window"] = {p.lo, p.hi};
  Json g = Json::object();
  for (const auto& [n, a] : p.groups) g[std::to_string(n)] = to_json(a);
  j["groups"] = g;
  return j;
}

inline Json to_json(const KResult& r, const std::string& label) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["label"] = label;
  j["window"] = {r.lo, r.hi};
  Json g = Json::object();
  for (const auto& [n, a] : r.groups) g[std::to_string(n)] = to_json(a);
  j["groups"] = g;
  j["outsideWindow"] = "unknown";
  j["routes"] = r.routes;
  return j;
}

// --- profinite ------------------------------------------------------------

inline InverseSystem system_from_json(const Json& j) {
  detail::check_version(j);
  const Json& st = detail::field(j, "stages");
  if (!st.is_array()) detail::bad("stages must be an array");
  std::vector<std::vector<std::string>> stages;
  for (const auto& s : st) stages.push_back(detail::str_list(s, "stage"));
  std::vector<std::vector<std::size_t>> trans;
  const Json& tr = j.contains("transitions") ? j.at("transitions") : Json::array();
  if (!tr.is_array()) detail::bad("transitions must be an array");
  for (std::size_t i = 0; i < tr.size(); ++i) {
    if (i + 1 >= stages.size()) detail::bad("more transitions than stage pairs");
    auto index_in = [&](const std::vector<std::string>& stage, const std::string& name) {
      auto it = std::find(stage.begin(), stage.end(), name);
      if (it == stage.end()) fail(ErrorKind::UnknownElement, name);
      return static_cast<std::size_t>(it - stage.begin());
    };
    std::vector<std::size_t> t(stages[i + 1].size(), stages[i].size());
    if (!tr[i].is_object()) detail::bad("transitions are objects from-element -> to-element");
    for (const auto& [from, to] : tr[i].items()) t[index_in(stages[i + 1], from)] = index_in(stages[i], detail::str(to, "transition target"));
    for (std::size_t y = 0; y < t.size(); ++y)
      if (t[y] == stages[i].size()) detail::bad("transition " + std::to_string(i) + " is not total");
    trans.push_back(std::move(t));
  }
  for (const auto& s : stages) {
    std::set<std::string> uniq(s.begin(), s.end());
    if (uniq.size() != s.size()) fail(ErrorKind::DuplicateElement, "stage element names must be unique");
  }
  return InverseSystem::validate(std::move(stages), std::move(trans));
}

inline Json to_json(const InverseSystem& s) {
  Json j;
  j["stages"] = s.stages();
  Json tr = Json::array();
  for (std::size_t i = 0; i < s.depth(); ++i) {
    Json m = Json::object();
    for (std::size_t y = 0; y < s.stage_size(i + 1); ++y) m[s.stage(i + 1)[y]] = s.stage(i)[s.transition(i)[y]];
    tr.push_back(m);
  }
  j["transitions"] = tr;
  return j;
}

// --- scissors ---------------------------------------------------------------

inline BigRational rational_from_string(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return BigRational(BigInt(s));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) detail::bad("zero denominator in " + s);
    return BigRational(BigInt(s.substr(0, slash)), den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    detail::bad("not a rational: " + s);
  }
}

inline GridGeometry geometry_from_json(const Json& j) {
  detail::check_version(j);
  const Json& dim = detail::field(j, "dimension");
  if (!dim.is_number_unsigned()) detail::bad("dimension must be 1 or 2");
  std::vector<std::vector<BigRational>> cuts;
  const Json& cj = detail::field(j, "cuts");
  if (!cj.is_array()) detail::bad("cuts must be an array of axes");
  for (const auto& axis : cj) {
    std::vector<BigRational> a;
    if (!axis.is_array()) detail::bad("each axis must be an array");
    for (const auto& x : axis) {
      if (x.is_number_integer())
        a.emplace_back(BigInt(x.get<std::int64_t>()));
      else
        a.push_back(rational_from_string(detail::str(x, "cut")));
    }
    cuts.push_back(std::move(a));
  }
  return GridGeometry::validate(dim.get<std::size_t>(), std::move(cuts));
}

inline std::vector<Bits> polytopes_from_json(const GridGeometry& g, const Json& j) {
  detail::check_version(j);
  std::vector<Bits> out;
  const Json& ps = detail::field(j, "polytopes");
  if (!ps.is_array()) detail::bad("polytopes must be an array of cell-index lists");
  for (const auto& p : ps) {
    Bits b = 0;
    if (!p.is_array()) detail::bad("a polytope is a list of cell indices");
    for (const auto& c : p) {
      if (!c.is_number_unsigned() || c.get<std::size_t>() >= g.cell_count()) detail::bad("cell index out of range");
      b |= bit(c.get<std::size_t>());
    }
    out.push_back(b);
  }
  return out;
}

inline Json error_json(const std::string& kind, const std::string& message) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

}  // namespace finstone::io
