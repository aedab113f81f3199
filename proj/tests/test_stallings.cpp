#include "oracles.hpp"

#include <freedense/digraph.hpp>
#include <freedense/stallings.hpp>

#include <doctest.h>

#include <random>

using namespace freedense;

namespace {
const FreeAlphabet F2(2);
const FreeAlphabet F3(3);

ReducedWord r(const char* text) { return parse_reduced(text, F2); }

StallingsGraph fold(std::initializer_list<const char*> texts) {
  std::vector<ReducedWord> gens;
  for (const char* t : texts) gens.push_back(r(t));
  return fold_from_generators(gens, F2);
}

std::vector<Word> letters_of(const std::vector<ReducedWord>& gens) {
  std::vector<Word> v;
  for (const auto& g : gens) v.push_back(g.letters());
  return v;
}
}  // namespace

TEST_CASE("folding examples") {
  const auto whole = fold({"a", "b"});
  CHECK(whole.vertex_count() == 1);
  CHECK(whole.edges().size() == 2);
  CHECK(is_saturated(whole));
  CHECK(index(whole) == SubgroupIndex::finite(1));

  const auto even = fold({"aa", "ab", "aB"});
  CHECK(even.vertex_count() == 2);
  CHECK(even.edges().size() == 4);
  for (const auto& e : even.edges()) CHECK(e.src != e.dst);
  CHECK(index(even) == SubgroupIndex::finite(2));

  const auto a2b = fold({"aa", "b"});
  CHECK(a2b.vertex_count() == 2);
  CHECK_FALSE(a2b.follow(1, Letter(1, +1)).has_value());
  CHECK_FALSE(is_saturated(a2b));
  CHECK(index(a2b).to_string() == "inf");

  const auto trivial = fold_from_generators(std::vector<ReducedWord>{}, F2);
  CHECK(trivial.vertex_count() == 1);
  CHECK(trivial.edges().empty());
  CHECK_THROWS_AS((void)fold_from_generators(std::vector<ReducedWord>{ReducedWord{}}, F2), std::invalid_argument);
}

TEST_CASE("coring keeps the basepoint and drops hanging trees") {
  // a b a⁻¹ folds to a single b-loop hanging off the basepoint by an a-edge.
  const auto g = fold({"abA"});
  CHECK(g.vertex_count() == 2);
  CHECK(membership(g, r("abA")));
  CHECK_FALSE(membership(g, r("b")));
}

TEST_CASE("membership") {
  const auto even = fold({"aa", "ab", "aB"});
  CHECK(membership(even, ReducedWord{}));
  CHECK(membership(even, r("ab")));
  CHECK_FALSE(membership(even, r("a")));
  CHECK_FALSE(membership(fold({"aa", "b"}), r("aba")));
  CHECK(membership(fold({"aa", "b"}), r("aab")));
}

TEST_CASE("bipartite and walk period") {
  const auto even = fold({"aa", "ab", "aB"});
  CHECK(is_bipartite(even));
  CHECK(walk_period(even) == 2);
  const auto odd = fold({"aa", "b", "abA"});
  CHECK(index(odd) == SubgroupIndex::finite(2));
  CHECK_FALSE(is_bipartite(odd));
  CHECK(walk_period(odd) == 1);
  const auto whole = fold({"a", "b"});
  CHECK_FALSE(is_bipartite(whole));
  CHECK(walk_period(whole) == 1);
  CHECK_THROWS_AS((void)walk_period(fold({"aa", "b"})), std::invalid_argument);
}

TEST_CASE("random subgroups against the naive folding oracle") {
  std::mt19937_64 rng(43);
  for (const FreeAlphabet& x : {F2, F3}) {
    for (int trial = 0; trial < 150; ++trial) {
      std::vector<ReducedWord> gens;
      const int count = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < count; ++i) {
        gens.push_back(ReducedWord::from_letters(oracle::random_reduced(x, 1 + static_cast<int>(rng() % 6), rng)));
      }
      const auto g = fold_from_generators(gens, x);
      const auto naive = oracle::naive_fold(x, letters_of(gens));
      CHECK(is_folded(g));
      CHECK(g.vertex_count() == naive.vertices);
      CHECK(g.edges().size() == naive.edges.size());
      CHECK(is_saturated(g) == naive.saturated);
      for (const auto& gen : gens) CHECK(membership(g, gen));

      // Bipartite three ways: 2-colouring, recursive colouring, generator lengths.
      // Conjugating a generator does not change its length parity, so every
      // loop through the basepoint has even length iff all generators do.
      const bool all_even = std::all_of(gens.begin(), gens.end(), [](const ReducedWord& w) { return w.size() % 2 == 0; });
      CHECK(is_bipartite(g) == oracle::naive_bipartite(naive));
      CHECK(is_bipartite(g) == all_even);

      if (is_saturated(g)) {
        const auto nb = non_backtracking_graph(g);
        CHECK(is_strongly_connected(nb));
        CHECK(digraph_period(nb) == walk_period(g));
      }
    }
  }
}

TEST_CASE("membership agrees with products of generators") {
  const std::vector<ReducedWord> gens{r("aa"), r("bab"), r("AbA")};
  const auto g = fold_from_generators(gens, F2);
  for (const auto& x : oracle::subgroup_products(letters_of(gens), 4)) {
    CHECK(membership(g, ReducedWord::from_letters(x)));
  }
}

TEST_CASE("subgroup language") {
  const auto lang = subgroup_language(fold({"aa", "ab", "aB"}));
  CHECK(lang.is_deterministic());
  const auto counts = count_words(lang, 8);
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 0);
  CHECK(counts[2] == 12);
  CHECK(counts[3] == 0);
}

TEST_CASE("digraph utilities") {
  const Adjacency cycle3{{1}, {2}, {0}};
  CHECK(is_strongly_connected(cycle3));
  CHECK(digraph_period(cycle3) == 3);
  const Adjacency two{{1}, {0, 1}};
  CHECK(digraph_period(two) == 1);
  const Adjacency split{{0}, {1}};
  CHECK_FALSE(is_strongly_connected(split));
  int count = 0;
  const auto comp = strongly_connected_components(split, &count);
  CHECK(count == 2);
  CHECK(comp[0] != comp[1]);
}
