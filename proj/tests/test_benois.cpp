#include "oracles.hpp"

#include <freedense/benois.hpp>
#include <freedense/rational_expr.hpp>
#include <freedense/stallings.hpp>

#include <doctest.h>

#include <random>

using namespace freedense;

namespace {
const FreeAlphabet F2(2);
const FreeAlphabet F3(3);

Automaton expr(const char* text) { return compile_to_nfa(parse_expr(text, F2), F2); }
ReducedWord r(const char* text) { return parse_reduced(text, F2); }

std::vector<ReducedWord> gens_of(std::initializer_list<const char*> texts) {
  std::vector<ReducedWord> v;
  for (const char* t : texts) v.push_back(r(t));
  return v;
}

std::set<Word> accepted_reduced(const Automaton& a, int max_len) {
  std::set<Word> out;
  for (int n = 0; n <= max_len; ++n) {
    for (const auto& x : oracle::all_reduced(F2, n)) {
      if (a.accepts(x)) out.insert(x);
    }
  }
  return out;
}
}  // namespace

TEST_CASE("saturation adds cancellation shortcuts") {
  const auto sat = benois_saturate(expr("aA"));
  CHECK(sat.epsilon_count() > expr("aA").epsilon_count());
  CHECK(remove_epsilons(sat).accepts(Word{}));
  const auto loop = reduced_language(expr("(aA)*"));
  CHECK(accepted_reduced(loop, 6) == std::set<Word>{Word{}});
}

TEST_CASE("reduced language examples") {
  CHECK(accepted_reduced(reduced_language(expr("aA")), 5) == std::set<Word>{Word{}});
  std::set<Word> abm;
  for (int m = 0; m <= 3; ++m) {
    Word x;
    for (int i = 0; i < m; ++i) {
      x.push_back(Letter(0, +1));
      x.push_back(Letter(1, +1));
    }
    abm.insert(x);
  }
  CHECK(accepted_reduced(reduced_language(expr("(ab)*")), 6) == abm);
}

TEST_CASE("flower of a², b, aba⁻¹ gives even a-exponent") {
  const auto flower = flower_automaton(F2, gens_of({"aa", "b", "abA"}));
  const auto red = reduced_language(flower);
  const auto products = oracle::subgroup_products({r("aa").letters(), r("b").letters(), r("abA").letters()}, 6);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& x : oracle::all_reduced(F2, n)) {
      int a_sum = 0;
      for (Letter l : x) a_sum += l.generator() == 0 ? l.sign() : 0;
      const bool even = a_sum % 2 == 0;
      CHECK(red.accepts(x) == even);
      // Every short product found by brute force is accepted.
      if (products.count(x) != 0) CHECK(red.accepts(x));
    }
  }
}

TEST_CASE("reduced language matches brute-force reduction of expression words") {
  for (const char* text : {"(ab|B)*a", "(aA|b)*", "a(bB)*A", "(aB|bA|A)*b", "(ab)*(BA)*", "a*A*"}) {
    const auto e = parse_expr(text, F2);
    const auto red = reduced_language(compile_to_nfa(e, F2));
    std::set<Word> expected;
    for (const auto& x : oracle::expand(e, 16)) {
      auto y = oracle::naive_reduce(x);
      if (y.size() <= 4) expected.insert(y);
    }
    // Words of length <= 4 reachable by expansion depth 16 must be accepted.
    for (const auto& y : expected) CHECK(red.accepts(y));
    // Conversely, short accepted words come from expression words of length <= 16
    // for these expressions; BBB in (aB|bA|A)*b already needs 13 letters.
    for (const auto& y : accepted_reduced(red, 3)) {
      if (expected.count(y) == 0) FAIL_CHECK("unexpected reduced word " << to_string(y) << " for " << text);
    }
    CHECK(equivalent(reduced_language(red), red));
  }
}

TEST_CASE("subset membership") {
  const auto flower = flower_automaton(F2, gens_of({"aa", "b"}));
  CHECK_FALSE(subset_membership(flower, r("aba")));
  CHECK(subset_membership(flower, r("aab")));
  CHECK(subset_membership(flower, ReducedWord{}));
  CHECK(subset_membership(expr("aA"), ReducedWord{}));
}

TEST_CASE("Benois membership agrees with Stallings membership") {
  std::mt19937_64 rng(41);
  for (const FreeAlphabet& x : {F2, F3}) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<ReducedWord> gens;
      const int count = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < count; ++i) {
        gens.push_back(ReducedWord::from_letters(oracle::random_reduced(x, 1 + static_cast<int>(rng() % 6), rng)));
      }
      const auto g = fold_from_generators(gens, x);
      const auto lang = reduced_language(flower_automaton(x, gens));
      for (int i = 0; i < 170; ++i) {
        const auto w = ReducedWord::from_letters(oracle::random_reduced(x, static_cast<int>(rng() % 11), rng));
        CHECK(membership(g, w) == lang.accepts(w));
      }
      for (const auto& gen : gens) CHECK(lang.accepts(gen));
    }
  }
}
