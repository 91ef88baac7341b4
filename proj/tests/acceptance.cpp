// Acceptance gate: one line per criterion, exact checks, wall-clock budgets
// compared in integer nanoseconds.

#include "finstone/verify/suites.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace finstone;
using namespace finstone::verify;
using Clock = std::chrono::steady_clock;
using std::chrono::nanoseconds;

namespace {

constexpr nanoseconds seconds(long long s) { return nanoseconds(s * 1'000'000'000LL); }

std::string format(nanoseconds d) {
  const long long ms = d.count() / 1'000'000;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%03lld s", ms / 1000, ms % 1000);
  return buf;
}

struct Outcome {
  bool passed = true;
  std::string note;
};

Outcome from_checks(const std::vector<CheckResult>& checks) {
  Outcome o;
  std::size_t cases = 0;
  for (const auto& c : checks) {
    cases += c.cases;
    if (!c.passed && o.passed) {
      o.passed = false;
      o.note = c.name + ": " + c.counterexample.dump();
    }
  }
  if (o.passed) o.note = std::to_string(cases) + " cases";
  return o;
}

struct Criterion {
  int id;
  std::string title;
  std::optional<nanoseconds> budget;
  std::function<Outcome()> body;
};

// Captures stdout and the exit status of a command.
std::pair<std::string, int> capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {"", -1};
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  return {out, pclose(p)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const Options opt;  // fixed default seed, exhaustive up to 5 points, 200 random

  const auto corpus_start = Clock::now();
  const std::vector<CorpusEntry> corpus = build_corpus(corpus_options(opt));
  const nanoseconds corpus_time = Clock::now() - corpus_start;
  std::cout << "corpus: " << corpus.size() << " lattices (" << format(corpus_time) << ")\n";

  BooleanCache cache;
  const std::vector<Criterion> criteria{
      {1, "Birkhoff round trips", seconds(5), [&] { return from_checks({check_birkhoff(opt)}); }},
      {2, "M(D) is torsion-free", seconds(10), [&] { return from_checks({check_freeness(corpus)}); }},
      {3, "rank equals point count, indicator unimodular", seconds(10),
       [&] { return from_checks({check_rank_oracle(corpus)}); }},
      {4, "adjoined top splits off Z", std::nullopt, [&] { return from_checks({check_split(corpus)}); }},
      {5, "Booleanization is an isomorphism on motives", std::nullopt,
       [&] { return from_checks({check_booleanization(corpus, cache)}); }},
      {6, "fin sheaves are the principal downsets", std::nullopt,
       [&] { return from_checks({check_basis_theorem(corpus)}); }},
      {7, "sheafification laws and meet preservation", std::nullopt,
       [&] { return from_checks({check_sheafification(opt, kSheafTriples)}); }},
      {8, "valuations factor uniquely through M(D)", std::nullopt,
       [&] { return from_checks({check_valuations(corpus, opt, kValuationsPerLattice)}); }},
      {9, "ring structure and idempotents", std::nullopt, [&] { return from_checks({check_ring(corpus)}); }},
      {10, "K-theory routes agree; K(sphere) on the 3-chain", std::nullopt,
       [&] { return from_checks({check_routes(corpus, cache), check_top_summand(corpus), check_sphere_chain()}); }},
      {11, "semi-orthogonal sum over points", std::nullopt, [&] { return from_checks({check_semiorthogonal(opt)}); }},
      {12, "profinite functions and partition counts", std::nullopt,
       [&] {
         return from_checks({check_profinite_systems(opt, kProfiniteSystems),
                             check_colimit_laws(opt, kProfiniteSystems, kColimitDraws),
                             check_partitions(kPartitionSetMax)});
       }},
      {13, "scissors ranks and disjoint additivity", std::nullopt,
       [&] { return from_checks({check_scissors_overlap(), check_scissors_disjoint(opt, kDisjointPairs)}); }},
      {14, "CLI verify reports are byte-identical", std::nullopt,
       [&]() -> Outcome {
         if (cli.empty()) return {false, "no CLI path given"};
         const std::string cmd = "\"" + cli + "\" verify all --seed 7";
         const auto a = capture(cmd), b = capture(cmd);
         if (a.second != 0 || b.second != 0) return {false, "verify all exited with a failure status"};
         if (a.first.empty() || a.first != b.first) return {false, "reports differ"};
         return {true, std::to_string(a.first.size()) + " bytes, identical"};
       }},
  };

  nanoseconds total = corpus_time;
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const nanoseconds took = Clock::now() - start;
    total += took;
    std::string timing = format(took);
    if (c.budget) {
      timing += " / budget " + format(*c.budget);
      if (took > *c.budget) {
        o.passed = false;
        o.note += "; over budget";
      }
    }
    all = all && o.passed;
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << " (" << timing << ") " << o.note
              << "\n";
  }
  const bool in_budget = total <= seconds(60);
  std::cout << (in_budget ? "[PASS] " : "[FAIL] ") << "total runtime " << format(total) << " / budget "
            << format(seconds(60)) << "\n";
  all = all && in_budget;
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
