#include <benchmark/benchmark.h>

#include <fstream>

#include "locdiag/diagnosis.hpp"
#include "locdiag/kernels.hpp"
#include "locdiag/locality.hpp"
#include "locdiag/parser.hpp"
#include "locdiag/system_file.hpp"

using namespace locdiag;

namespace {

SystemFile load_fixture(const char* name) {
  std::ifstream in(std::string(LOCDIAG_FIXTURE_DIR) + "/" + name);
  return parse_system_file(in);
}

const SystemFile& three_gate() {
  static const SystemFile f = load_fixture("circuit3.sys");
  return f;
}

const SystemFile& eleven_gate() {
  static const SystemFile f = load_fixture("circuit11.sys");
  return f;
}

const Formula& observation() {
  static const Formula obs = parse_formula("!C & !F");
  return obs;
}

void BM_ParseRule(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_formula("!(G9 | G10) & okW6 -> !G11"));
  }
}
BENCHMARK(BM_ParseRule);

void BM_SatisfiabilityElevenGate(benchmark::State& state) {
  const BeliefBase base = system_base(eleven_gate().system(), observation());
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_satisfiable(base));
  }
}
BENCHMARK(BM_SatisfiabilityElevenGate);

void BM_KernelsElevenGate(benchmark::State& state) {
  const BeliefBase base = system_base(eleven_gate().system(), observation());
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_kernels(base, Formula::falsum()));
  }
}
BENCHMARK(BM_KernelsElevenGate);

void BM_DiagnoseThreeGate(benchmark::State& state) {
  const System system = three_gate().system();
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagnose(system, observation()));
  }
}
BENCHMARK(BM_DiagnoseThreeGate);

void BM_DiagnoseElevenGateGlobal(benchmark::State& state) {
  const System system = eleven_gate().system();
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagnose(system, observation()));
  }
}
BENCHMARK(BM_DiagnoseElevenGateGlobal);

void BM_DiagnoseElevenGateLocal(benchmark::State& state) {
  const System system = eleven_gate().system();
  const RelatednessGraph graph = eleven_gate().relatedness_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_diagnose(system, observation(), graph));
  }
}
BENCHMARK(BM_DiagnoseElevenGateLocal);

void BM_RetrieveElevenGate(benchmark::State& state) {
  const System system = eleven_gate().system();
  const RelatednessGraph graph = eleven_gate().relatedness_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(retrieve(observation(), system.ass, graph));
  }
}
BENCHMARK(BM_RetrieveElevenGate);

void BM_HittingSets(benchmark::State& state) {
  std::vector<AtomSet> family;
  for (int i = 0; i < 6; ++i) {
    AtomSet s;
    for (int j = 0; j < 4; ++j) s.insert(Atom("ok" + std::to_string((i + 2 * j) % 9)));
    family.push_back(std::move(s));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_hitting_sets(family));
  }
}
BENCHMARK(BM_HittingSets);

}  // namespace

BENCHMARK_MAIN();
