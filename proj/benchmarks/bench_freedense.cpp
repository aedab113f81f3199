#include <freedense/automaton.hpp>
#include <freedense/benois.hpp>
#include <freedense/orbits.hpp>
#include <freedense/rational_expr.hpp>
#include <freedense/sft.hpp>
#include <freedense/stallings.hpp>

#include <benchmark/benchmark.h>

using namespace freedense;

namespace {

const FreeAlphabet F2(2);

void BM_CountReducedWords(benchmark::State& state) {
  const Automaton red = reduced_word_automaton(FreeAlphabet(static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(count_words(red, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CountReducedWords)->Args({20, 2})->Args({200, 2})->Args({200, 5});

void BM_BenoisReduction(benchmark::State& state) {
  const Automaton nfa = compile_to_nfa(parse_expr("(aa|AA|b|B|abA|aBA)*(ab|BA)*", F2), F2);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_language(nfa));
}
BENCHMARK(BM_BenoisReduction);

void BM_Folding(benchmark::State& state) {
  std::vector<ReducedWord> gens;
  for (const char* g : {"aabAB", "bbaBA", "abab", "BaBaB", "aaa", "bAbAb"}) gens.push_back(parse_reduced(g, F2));
  for (auto _ : state) benchmark::DoNotOptimize(fold_from_generators(gens, F2));
}
BENCHMARK(BM_Folding);

void BM_OrbitBfs(benchmark::State& state) {
  const ReducedWord a = parse_reduced("a", F2);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_bfs(a, static_cast<int>(state.range(0)), F2));
}
BENCHMARK(BM_OrbitBfs)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SftEntropy(benchmark::State& state) {
  const FollowerGraph g = build_follower_graph(SftSpec("aAbB", {"aA", "Aa", "bB", "Bb", "ab"}));
  for (auto _ : state) benchmark::DoNotOptimize(entropy(g));
}
BENCHMARK(BM_SftEntropy);

}  // namespace

BENCHMARK_MAIN();
