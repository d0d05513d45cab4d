#include <benchmark/benchmark.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "proofinfo/knowledge_system.hpp"
#include "proofinfo/measure.hpp"
#include "proofinfo/profile.hpp"

using namespace proofinfo;

namespace {

// Overlapping proofs over a shared pool, so supports shrink slowly and the
// search has real work to do.
KnowledgeSystem dense_system(int pool, int goals, int per_goal, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(0.8);
  std::vector<std::string> goal_names;
  std::vector<ProofDraft> drafts;
  for (int g = 0; g < goals; ++g) {
    goal_names.push_back("Goal(" + std::to_string(g) + ")");
    std::set<std::vector<std::string>> seen;
    while (static_cast<int>(seen.size()) < per_goal) {
      std::vector<std::string> body;
      for (int f = 0; f < pool; ++f) {
        if (seen.empty() || keep(rng)) body.push_back("f" + std::to_string(f));
      }
      body.push_back(goal_names.back());
      if (seen.insert(body).second) drafts.push_back({"P" + std::to_string(drafts.size()), body});
    }
  }
  return KnowledgeSystem::build(goal_names, drafts);
}

struct Case {
  KnowledgeSystem ks;
  ProbabilityMeasure pr;
  const Proof* proof;
  explicit Case(int pool)
      : ks(dense_system(pool, 4, 6, 7)), pr(proof_measure(ks)), proof(&ks.proofs().front()) {}
};

const Case& case_for(int pool) {
  static const Case c16(15), c20(19);
  return pool == 16 ? c16 : c20;
}

template <class Search>
void run(benchmark::State& state, Search search) {
  const auto& c = case_for(static_cast<int>(state.range(0)));
  const auto k = state.range(1);
  for (auto _ : state) {
    auto r = search(c.ks, c.pr, *c.proof, k);
    benchmark::DoNotOptimize(r.value);
  }
}

void BM_DeltaOracle(benchmark::State& state) {
  run(state, [](const auto& ks, const auto& pr, const auto& q, std::int64_t k) {
    return delta_oracle(ks, pr, q, k);
  });
}

void BM_DeltaSerial(benchmark::State& state) {
  run(state, [](const auto& ks, const auto& pr, const auto& q, std::int64_t k) {
    return delta_serial(ks, pr, q, k);
  });
}

void BM_DeltaParallel(benchmark::State& state) {
  run(state, [](const auto& ks, const auto& pr, const auto& q, std::int64_t k) {
    return delta(ks, pr, q, k);
  });
}

void BM_ProfileAll(benchmark::State& state) {
  const auto& c = case_for(static_cast<int>(state.range(0)));
  SearchOptions options;
  options.parallel = state.range(1) != 0;
  for (auto _ : state) {
    auto ps = profile_all(c.ks, c.pr, options);
    benchmark::DoNotOptimize(ps.data());
  }
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int pool : {16, 20}) {
    for (int k : {2, 5, 8}) b->Args({pool, k});
  }
}

}  // namespace

BENCHMARK(BM_DeltaOracle)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeltaSerial)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeltaParallel)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProfileAll)->Args({16, 0})->Args({16, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
