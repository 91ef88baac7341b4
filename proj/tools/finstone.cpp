// Command-line front end: reads JSON descriptions, runs one computation or
// verification suite, and writes a JSON (or --plain text) report to stdout.
//
// Exit codes: 0 success, 2 invalid input or usage, 3 verification failure.

#include "finstone/finstone.hpp"
#include "finstone/io/json.hpp"
#include "finstone/io/plain.hpp"
#include "finstone/verify/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using finstone::io::Json;
namespace fs = finstone;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitVerification = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return Json::parse(in);
}

std::size_t budget_from_env() {
  const char* s = std::getenv("FINSTONE_ENUM_BUDGET");
  if (!s || !*s) return fs::kDefaultEnumerationBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError("FINSTONE_ENUM_BUDGET must be a positive integer");
  return static_cast<std::size_t>(v);
}

Json with_version(Json body) {
  Json j;
  j["schemaVersion"] = fs::io::kSchemaVersion;
  for (auto& [k, v] : body.items()) j[k] = std::move(v);
  return j;
}

Json cmd_points(const std::string& path, std::size_t budget) {
  const fs::FinDistLattice d = fs::io::lattice_from_json(read_json(path), budget);
  const fs::Poset p = fs::birkhoff_points(d);
  return with_version({{"count", p.size()}, {"points", fs::io::to_json(p)}});
}

Json cmd_opens(const std::string& path, std::size_t budget) {
  const fs::FinDistLattice d = fs::birkhoff_opens(fs::io::poset_from_json(read_json(path)), budget);
  return with_version({{"size", d.size()}, {"lattice", fs::io::to_json(d)}});
}

Json cmd_sheaves(const std::string& path, std::size_t budget) {
  const fs::FinSite s = fs::io::site_from_json(read_json(path), budget);
  Json list = Json::array();
  const auto sheaves = fs::enumerate_sheaves(s, budget);
  for (const auto& h : sheaves) list.push_back(fs::io::downset_json(s.carrier(), h.members));
  return with_version({{"count", sheaves.size()}, {"sheaves", list}});
}

Json cmd_sheafify(const std::string& site_path, const std::string& downset_path, std::size_t budget) {
  const fs::FinSite s = fs::io::site_from_json(read_json(site_path), budget);
  const fs::DownSet f = fs::io::downset_from_json(s.carrier(), read_json(downset_path));
  const fs::PropSheaf h = fs::sheafify(s, f);
  return with_version({{"inputIsSheaf", fs::is_sheaf(s, f)}, {"members", fs::io::downset_json(s.carrier(), h.members)}});
}

Json cmd_motives(const std::string& path, std::size_t budget) {
  const fs::MotiveModule m = fs::MotiveModule::compute(fs::io::lattice_from_json(read_json(path), budget));
  fs::certify_free(m);
  return fs::io::motive_report(m, true);
}

Json cmd_basis(const std::string& path, std::size_t budget) {
  const fs::MotiveModule m = fs::MotiveModule::compute(fs::io::lattice_from_json(read_json(path), budget));
  fs::certify_free(m);
  const fs::PointBasisIso iso = fs::point_basis_iso(m);
  Json j = fs::io::motive_report(m, false);
  Json snf = Json::array();
  for (const auto& v : m.snf_basis()) snf.push_back(fs::io::to_json(v));
  j["snfBasis"] = snf;
  j["indicatorOnSnfBasis"] = fs::io::to_json(iso.on_snf_basis);
  j["unimodular"] = true;
  return j;
}

Json cmd_booleanize(const std::string& path, std::size_t budget) {
  const fs::FinDistLattice d = fs::io::lattice_from_json(read_json(path), budget);
  const fs::Booleanization b = fs::booleanize(d, budget);
  const fs::BooleanizationIsoReport rep =
      fs::booleanization_iso(fs::MotiveModule::compute(b.hom.source), fs::MotiveModule::compute(b.boolean), b.hom);
  Json map = Json::object();
  for (std::size_t i = 0; i < d.size(); ++i) map[d.label(i)] = b.boolean->label(b.hom(i));
  return with_version({{"boolean", fs::io::to_json(*b.boolean)},
                       {"map", map},
                       {"rank", rep.rank},
                       {"onPointBases", fs::io::to_json(rep.on_points)},
                       {"unimodular", true}});
}

Json cmd_valuation(const std::string& lattice_path, const std::string& valuation_path, std::size_t budget) {
  const fs::MotiveModule m = fs::MotiveModule::compute(fs::io::lattice_from_json(read_json(lattice_path), budget));
  const fs::FinDistLattice& d = m.lattice();
  const fs::ValuationData v = fs::io::valuation_from_json(d, read_json(valuation_path));
  const fs::IntMatrix h = fs::factor_valuation(m, v);
  Json basis = Json::array();
  for (std::size_t p = 0; p < m.point_count(); ++p) basis.push_back(d.label(d.point_element(p)));
  Json images = Json::object();
  for (std::size_t u = 0; u < d.size(); ++u) {
    const fs::IntVector x = fs::apply_factor(m, h, v.target, u);
    if (x != v.target.reduce(v.values[u]))
      fs::fail(fs::ErrorKind::NotIso, "factored hom misses the value at " + d.label(u));
    images[d.label(u)] = fs::io::to_json(x);
  }
  return with_version(
      {{"target", fs::io::to_json(v.target)}, {"basis", basis}, {"matrix", fs::io::to_json(h)}, {"reproduced", images}});
}

Json cmd_ktheory(const std::string& path, const std::string& profile_path, std::size_t budget) {
  const fs::FinDistLattice d = fs::io::lattice_from_json(read_json(path), budget);
  const fs::CoeffProfile prof =
      profile_path.empty() ? fs::sphere_k_profile() : fs::io::profile_from_json(read_json(profile_path));
  if (d.has_top()) return fs::io::to_json(fs::coherent_vs_constructible(d, prof).combined, prof.label);
  return fs::io::to_json(fs::k_of_locally_coherent(d, prof), prof.label);
}

Json cmd_scissors(const std::string& geometry_path, const std::string& gens_path) {
  const fs::GridGeometry g = fs::io::geometry_from_json(read_json(geometry_path));
  const fs::PolytopeLattice pl = gens_path.empty()
                                     ? fs::grid_lattice(g)
                                     : fs::generated_sublattice(g, fs::io::polytopes_from_json(g, read_json(gens_path)));
  const fs::PolytopeModuleReport rep = fs::polytope_module(pl);
  Json basis = Json::array();
  for (const auto& c : rep.basis) basis.push_back(fs::format_combination(g, c));
  Json elems = Json::array();
  for (std::size_t i = 0; i < pl.lattice.size(); ++i) elems.push_back(pl.lattice.label(i));
  return with_version({{"cells", g.cell_count()}, {"polytopes", elems}, {"rank", rep.rank}, {"basis", basis}});
}

Json cmd_profinite(const std::string& path, bool& ok) {
  const fs::InverseSystem sys = fs::io::system_from_json(read_json(path));
  const fs::MotivesVsContinuousReport rep = fs::motives_vs_continuous(sys);
  ok = rep.ok;
  Json stages = Json::array();
  for (const auto& s : rep.stages)
    stages.push_back({{"stage", s.stage}, {"points", s.function_rank}, {"motiveRank", s.motive_rank}});
  return with_version({{"passed", rep.ok},
                       {"stages", stages},
                       {"transitionInjective", rep.transition_injective},
                       {"squaresCommute", rep.square_commutes},
                       {"detail", rep.detail}});
}

int emit(const Json& j, bool plain, int code) {
  std::cout << (plain ? fs::io::to_plain(j) : j.dump(2) + "\n");
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite distributive lattices, their sheaves, and modules of motives"};
  app.require_subcommand(1);
  bool plain = false;
  app.add_flag("--plain", plain, "Aligned text instead of JSON");

  std::string in1, in2, profile_path, suite;
  fs::verify::Options vopt;
  auto one_input = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("input", in1, "Input JSON")->required();
    c->add_flag("--plain", plain, "Aligned text instead of JSON");
    return c;
  };
  CLI::App* points = one_input("points", "Join-irreducibles of a lattice");
  CLI::App* opens = one_input("opens", "Downset lattice of a poset");
  CLI::App* sheaves = one_input("sheaves", "All propositional sheaves on a site");
  CLI::App* sheafify = one_input("sheafify", "Sheafify a downset");
  sheafify->add_option("downset", in2, "Downset JSON")->required();
  CLI::App* motives = one_input("motives", "Module of motives and its ring structure");
  CLI::App* basis = one_input("basis", "Certified point basis of the module of motives");
  CLI::App* booleanize = one_input("booleanize", "Booleanization and its motive isomorphism");
  CLI::App* valuation = one_input("valuation-factor", "Factor a valuation through the module of motives");
  valuation->add_option("valuation", in2, "Valuation JSON")->required();
  CLI::App* ktheory = one_input("ktheory", "Coefficient profile tensored with the module of motives");
  ktheory->add_option("--profile", profile_path, "Coefficient profile JSON (default: K of the sphere)");
  CLI::App* scissors = one_input("scissors", "Polytope module of a grid or generated sublattice");
  scissors->add_option("gens", in2, "Generating polytopes JSON");
  CLI::App* profinite = one_input("profinite", "Motives versus continuous functions on an inverse system");

  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "birkhoff, freeness, sheaf, valuation, profinite, ktheory-routes, scissors, all")
      ->required();
  verify->add_option("--seed", vopt.seed, "Random seed");
  verify->add_option("--max", vopt.max_exhaustive, "Largest exhaustive poset size")->check(CLI::Range(0, 6));
  verify->add_option("--random", vopt.random, "Number of random lattices");
  verify->add_flag("--plain", plain, "Aligned text instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit(fs::io::error_json("UsageError", e.what()), plain, kExitInvalid);
  }

  try {
    const std::size_t budget = budget_from_env();
    if (verify->parsed()) {
      if (!fs::verify::is_suite(suite)) throw UsageError("unknown suite: " + suite);
      if (suite == "all") {
        const auto rep = fs::verify::run_all(vopt);
        return emit(rep.to_json(), plain, rep.passed() ? kExitOk : kExitVerification);
      }
      const auto rep = fs::verify::run_suite(suite, vopt);
      return emit(rep.to_json(), plain, rep.passed() ? kExitOk : kExitVerification);
    }
    if (points->parsed()) return emit(cmd_points(in1, budget), plain, kExitOk);
    if (opens->parsed()) return emit(cmd_opens(in1, budget), plain, kExitOk);
    if (sheaves->parsed()) return emit(cmd_sheaves(in1, budget), plain, kExitOk);
    if (sheafify->parsed()) return emit(cmd_sheafify(in1, in2, budget), plain, kExitOk);
    if (motives->parsed()) return emit(cmd_motives(in1, budget), plain, kExitOk);
    if (basis->parsed()) return emit(cmd_basis(in1, budget), plain, kExitOk);
    if (booleanize->parsed()) return emit(cmd_booleanize(in1, budget), plain, kExitOk);
    if (valuation->parsed()) return emit(cmd_valuation(in1, in2, budget), plain, kExitOk);
    if (ktheory->parsed()) return emit(cmd_ktheory(in1, profile_path, budget), plain, kExitOk);
    if (scissors->parsed()) return emit(cmd_scissors(in1, in2), plain, kExitOk);
    if (profinite->parsed()) {
      bool ok = true;
      const Json j = cmd_profinite(in1, ok);
      return emit(j, plain, ok ? kExitOk : kExitVerification);
    }
    throw UsageError("no verb given");
  } catch (const fs::Error& e) {
    return emit(fs::io::error_json(std::string(fs::to_string(e.kind())), e.what()), plain,
                fs::is_verification_failure(e.kind()) ? kExitVerification : kExitInvalid);
  } catch (const Json::exception& e) {
    return emit(fs::io::error_json("ParseError", e.what()), plain, kExitInvalid);
  } catch (const UsageError& e) {
    return emit(fs::io::error_json("UsageError", e.what()), plain, kExitInvalid);
  }
}
