// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "proofinfo/cli.hpp"
#include "proofinfo/fixture.hpp"
#include "proofinfo/inference/checker.hpp"
#include "proofinfo/inference/enumerator.hpp"
#include "proofinfo/inference/kformula.hpp"
#include "proofinfo/inference/world.hpp"
#include "proofinfo/measure.hpp"
#include "proofinfo/profile.hpp"
#include "proofinfo/weight.hpp"
#include "support.hpp"

using namespace proofinfo;
namespace inf = proofinfo::inference;

namespace {

constexpr double kLooseTol = 5e-3;
constexpr double kRegressionTol = 1e-5;
constexpr double kTightTol = 1e-9;
constexpr double kProfileTol = 1e-3;
constexpr double kEntropyTol = 1e-3;
constexpr std::uint64_t kSeed = 20241016;

struct Gate {
  int failed = 0;
  void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << id << ". " << title;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << '\n';
    if (!ok) ++failed;
  }
};

std::vector<Formula> formulas(std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (const auto* t : texts) out.push_back(Formula::normalize(t));
  return out;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

struct Fixture {
  KnowledgeSystem ks = builtin_example();
  ProbabilityMeasure pr = proof_measure(ks);
};

void criterion_1(Gate& g, const Fixture& f) {
  bool ok = true;
  for (std::size_t i = 0; i < f.ks.proofs().size(); ++i) {
    const auto& id = f.ks.proofs()[i].id;
    const Rational want = id == "QF1" ? Rational(1, 3) : Rational(1, 9);
    ok = ok && f.pr.per_proof[i] == want;
  }
  g.report(1, "fixture measure is exact", ok, "");
}

void criterion_2(Gate& g, const Fixture& f) {
  struct Case {
    const char* name;
    std::vector<Formula> s;
    double rough;
    double regression;
  };
  const std::vector<Case> cases = {
      {"Day=Fri", formulas({"Day=Fri"}), 0.31, 0.306091},
      {"S1", formulas({"Brd(R2,Dok)"}), 1.21, 1.210744},
      {"S2", formulas({"Day≠Fri", "Brd(R2,Dok)"}), 0.54, 0.539408},
      {"S3", formulas({"Day≠Fri", "Brd(R2,Dok)", "Win(Bok)∨Win(Fok)"}), 0.36, 0.360565},
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const double d = weight(f.ks, f.pr, c.s).value;
    const bool rough = std::abs(d - c.rough) <= kLooseTol;
    const bool reg = std::abs(d - c.regression) <= kRegressionTol;
    if (!rough || !reg) {
      if (!detail.empty()) detail += "; ";
      detail += std::string(c.name) + "=" + num(d) + " vs " + num(c.regression);
    }
    ok = ok && rough && reg;
  }
  g.report(2, "worked weights", ok, detail);
}

void criterion_3(Gate& g, const Fixture& f) {
  bool ok = std::abs(weight(f.ks, f.pr, {}).value - testing::kLog2Of3) <= kTightTol;
  std::mt19937_64 rng(kSeed + 3);
  for (int i = 0; i < 200; ++i) {
    auto ks = testing::random_system(rng);
    auto pr = proof_measure(ks);
    const double m = static_cast<double>(ks.goal_count());
    ok = ok && std::abs(weight(ks, pr, {}).value - std::log2(m)) <= kTightTol;
  }
  g.report(3, "empty subset has weight log2 M", ok, "200 random systems");
}

void criterion_4(Gate& g) {
  std::mt19937_64 rng(kSeed + 4);
  bool ok = true;
  int certain = 0;
  for (int i = 0; i < 200; ++i) {
    auto ks = testing::random_system(rng);
    auto pr = proof_measure(ks);
    for (const auto& proof : ks.proofs()) {
      for (int rep = 0; rep < 4; ++rep) {
        auto s = testing::random_subset(rng, proof.formulas);
        if (!is_certain(ks, pr, s)) continue;
        ++certain;
        ok = ok && weight(ks, pr, s).value == 0.0;
      }
    }
  }
  g.report(4, "certain subsets weigh exactly 0", ok && certain > 0,
           std::to_string(certain) + " certain subsets");
}

void criterion_5(Gate& g) {
  std::mt19937_64 rng(kSeed + 5);
  bool ok = true;
  for (int pairs = 0; pairs < 1000;) {
    auto ks = testing::random_system(rng);
    auto pr = proof_measure(ks);
    for (const auto& proof : ks.proofs()) {
      if (pairs == 1000) break;
      auto big = testing::random_subset(rng, proof.formulas);
      auto small = testing::random_subset(rng, big);
      ok = ok && weight(ks, pr, small).value >= weight(ks, pr, big).value - kTightTol;
      ++pairs;
    }
  }
  g.report(5, "weight is non-increasing in S", ok, "1000 pairs");
}

void criterion_6(Gate& g) {
  std::mt19937_64 rng(kSeed + 6);
  bool ok = true;
  double worst = 0.0;
  for (int n = 0; n < 1000;) {
    auto ks = testing::random_system(rng);
    auto pr = proof_measure(ks);
    for (const auto& proof : ks.proofs()) {
      if (n == 1000) break;
      auto s = testing::random_subset(rng, proof.formulas);
      const double diff = std::abs(weight(ks, pr, s).value - weight_defform(ks, pr, s));
      worst = std::max(worst, diff);
      ok = ok && diff <= kTightTol;
      ++n;
    }
  }
  g.report(6, "log-sum and ratio forms agree", ok, "max diff " + num(worst));
}

void criterion_7(Gate& g, const Fixture& f) {
  const std::vector<double> want = {testing::kLog2Of3, 1.2107, 0.5394, 0.3606, 0, 0, 0};
  auto p = profile(f.ks, f.pr, f.ks.proof("QB3"));
  bool ok = p.deltas.size() == want.size();
  for (std::size_t k = 0; ok && k < want.size(); ++k) {
    ok = std::abs(p.deltas[k] - want[k]) <= kProfileTol;
  }
  const auto& qb1 = f.ks.proof("QB1");
  ok = ok && std::abs(delta(f.ks, f.pr, qb1, 1).value - 0.3061) <= kProfileTol;
  ok = ok && delta(f.ks, f.pr, qb1, 2).value == 0.0;
  g.report(7, "delta profiles of QB3 and QB1", ok, "");
}

void criterion_8(Gate& g, const Fixture& f) {
  const std::size_t qb3 = zeta(f.ks, f.pr, f.ks.proof("QB3"));
  const std::size_t qb1 = zeta(f.ks, f.pr, f.ks.proof("QB1"));
  const std::size_t qd1 = zeta(f.ks, f.pr, f.ks.proof("QD1"));
  g.report(8, "certainty thresholds", qb3 == 4 && qb1 == 2 && qd1 == 1,
           "QB3=" + std::to_string(qb3) + " QB1=" + std::to_string(qb1) +
               " QD1=" + std::to_string(qd1));
}

void criterion_9(Gate& g) {
  std::mt19937_64 rng(kSeed + 9);
  testing::Shape shape;
  shape.max_pool = 11;
  bool ok = true;
  long checks = 0;
  for (int i = 0; i < 100; ++i) {
    auto ks = testing::random_system(rng, shape);
    auto pr = proof_measure(ks);
    for (const auto& proof : ks.proofs()) {
      for (std::size_t k = 0; k <= proof.formulas.size(); ++k) {
        auto fast = delta(ks, pr, proof, static_cast<std::int64_t>(k));
        auto slow = delta_oracle(ks, pr, proof, static_cast<std::int64_t>(k));
        ok = ok && fast.value == slow.value && fast.witness == slow.witness;
        ++checks;
      }
    }
  }
  g.report(9, "pruned search matches exhaustive oracle", ok,
           std::to_string(checks) + " (proof, k) pairs");
}

void criterion_10(Gate& g, const Fixture& f) {
  std::mt19937_64 rng(kSeed + 10);
  bool ok = true;
  auto monotone = [](const WeightProfile& p) {
    for (std::size_t k = 1; k < p.deltas.size(); ++k) {
      if (p.deltas[k] > p.deltas[k - 1]) return false;
    }
    return true;
  };
  for (const auto& p : profile_all(f.ks, f.pr)) ok = ok && monotone(p);
  for (int i = 0; i < 100; ++i) {
    auto ks = testing::random_system(rng);
    auto pr = proof_measure(ks);
    for (const auto& p : profile_all(ks, pr)) ok = ok && monotone(p);
  }
  g.report(10, "delta is non-increasing in k", ok, "fixture + 100 random systems");
}

void criterion_11(Gate& g) {
  const std::vector<Rational> a = {Rational(1, 4), Rational(1, 4), Rational(1, 2)};
  const std::vector<Rational> b = {Rational(1, 8), Rational(7, 16), Rational(7, 16)};
  const std::vector<Rational> c = {Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  const double ha = shannon_entropy(a);
  const double hb = shannon_entropy(b);
  const double hc = shannon_entropy(c);
  const bool ok = std::abs(ha - 1.5) <= kTightTol && std::abs(hb - 1.4186) <= kEntropyTol &&
                  std::abs(hc - testing::kLog2Of3) <= kTightTol;
  g.report(11, "Shannon baseline", ok, num(ha) + ", " + num(hb) + ", " + num(hc));
}

std::vector<inf::KFormula> listing(const inf::WorldSpec& world, const Proof& p) {
  std::vector<inf::KFormula> out;
  for (const auto& f : p.formulas) out.push_back(inf::parse_kformula(f.text(), world));
  return out;
}

std::vector<inf::KFormula> goal_forms(const inf::WorldSpec& world) {
  std::vector<inf::KFormula> out;
  for (const auto& p : world.participants) out.push_back(inf::KFormula::win(p));
  return out;
}

void criterion_12(Gate& g, const Fixture& f) {
  const auto world = inf::builtin_world();
  const auto goals = goal_forms(world);
  bool ok = true;
  for (const auto& p : f.ks.proofs()) {
    ok = ok && inf::check_proof(world, listing(world, p), goals).valid;
  }
  struct Mutant {
    const char* proof;
    const char* removed;
    bool stays_valid;
  };
  const std::vector<Mutant> mutants = {
      {"QB1", "Day=Fri", false},     {"QB1", "Brd(R2,Bok)", false},
      {"QB3", "Brd(R3,Fok)", false}, {"QB3", "Day≠Fri", false},
      {"QD2", "Brd(R3,Fok)", true},  {"QD3", "Brd(R1,Dok)", true},
      {"QF1", "Brd(R3,Bok)", false},
  };
  int matched = 0;
  for (const auto& m : mutants) {
    auto proof = listing(world, f.ks.proof(m.proof));
    const auto gone = inf::parse_kformula(m.removed, world);
    proof.erase(std::remove(proof.begin(), proof.end(), gone), proof.end());
    if (inf::check_proof(world, proof, goals).valid == m.stays_valid) ++matched;
  }
  ok = ok && matched == static_cast<int>(mutants.size());
  g.report(12, "fixture proofs check and mutants behave as predicted", ok,
           std::to_string(matched) + "/7 mutants as predicted");
}

void criterion_13(Gate& g, const Fixture& f) {
  const auto world = inf::builtin_world();
  const auto goals = goal_forms(world);
  inf::CheckOptions strict;
  strict.strict = true;
  auto any = [](const std::string&) { return true; };

  bool ok = true;
  const std::vector<inf::KFormula> data = {inf::KFormula::day_is("Fri"),
                                           inf::KFormula::brd("R2", "Bok")};
  auto r = inf::enumerate_proofs(world, data, any);
  ok = ok && r.proofs.size() == 1;
  if (ok) {
    auto qb1 = listing(world, f.ks.proof("QB1"));
    std::set<inf::KFormula> want(qb1.begin(), qb1.end());
    std::set<inf::KFormula> got(r.proofs[0].formulas.begin(), r.proofs[0].formulas.end());
    ok = want == got;
  }

  std::vector<inf::KFormula> facts = {inf::KFormula::day_is("Fri"),
                                      inf::KFormula::day_is_not("Fri")};
  for (const auto& [source, schedule] : world.sources) {
    for (const auto& p : world.participants) facts.push_back(inf::KFormula::brd(source, p));
  }
  int rechecked = 0;
  for (unsigned mask = 0; mask < (1U << facts.size()); ++mask) {
    if ((mask & 3U) == 3U) continue;
    std::vector<inf::KFormula> user;
    for (std::size_t i = 0; i < facts.size(); ++i) {
      if (mask & (1U << i)) user.push_back(facts[i]);
    }
    for (const auto& p : inf::enumerate_proofs(world, user, any).proofs) {
      ok = ok && inf::check_proof(world, p.formulas, goals, strict).valid;
      ++rechecked;
    }
  }
  g.report(13, "enumerated proofs round-trip", ok,
           std::to_string(rechecked) + " proofs re-checked strictly");
}

void criterion_14(Gate& g) {
  auto run = [] {
    std::ostringstream out, err;
    const int code = cli::run({"demo"}, out, err);
    return std::make_pair(code, out.str());
  };
  auto a = run();
  auto b = run();
  std::ifstream in(std::filesystem::path(PROOFINFO_TEST_GOLDEN) / "demo.json");
  std::stringstream golden;
  golden << in.rdbuf();
  const bool ok = a.first == 0 && b.first == 0 && a.second == b.second &&
                  a.second == golden.str();
  g.report(14, "demo output is deterministic and matches golden", ok, "");
}

}  // namespace

int main() {
  Gate gate;
  const Fixture fixture;
  const std::vector<std::function<void()>> criteria = {
      [&] { criterion_1(gate, fixture); },  [&] { criterion_2(gate, fixture); },
      [&] { criterion_3(gate, fixture); },  [&] { criterion_4(gate); },
      [&] { criterion_5(gate); },           [&] { criterion_6(gate); },
      [&] { criterion_7(gate, fixture); },  [&] { criterion_8(gate, fixture); },
      [&] { criterion_9(gate); },           [&] { criterion_10(gate, fixture); },
      [&] { criterion_11(gate); },          [&] { criterion_12(gate, fixture); },
      [&] { criterion_13(gate, fixture); }, [&] { criterion_14(gate); },
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      gate.report(static_cast<int>(i + 1), "threw", false, e.what());
    }
  }
  std::cout << (gate.failed == 0 ? "all criteria passed" : std::to_string(gate.failed) + " failed")
            << '\n';
  return gate.failed == 0 ? 0 : 1;
}
