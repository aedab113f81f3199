#include "oracles.hpp"

#include <freedense/sft.hpp>

#include <doctest.h>

#include <cmath>
#include <random>

using namespace freedense;

namespace {
const std::vector<std::string> kRedForbidden{"aA", "Aa", "bB", "Bb"};

std::vector<std::string> with(std::vector<std::string> base, const std::string& extra) {
  base.push_back(extra);
  return base;
}
}  // namespace

TEST_CASE("forbidden list normalization") {
  const SftSpec s("01", {"11", "11", "0"});
  CHECK(s.alphabet() == "1");
  CHECK(s.forbidden() == std::vector<std::string>{"11"});
  CHECK(s.window() == 1);
  CHECK(SftSpec("01", {"010"}).window() == 2);
  CHECK(SftSpec("01", {}).window() == 1);
  CHECK_THROWS_AS(SftSpec("001", {"11"}), std::invalid_argument);
  CHECK_THROWS_AS(SftSpec("01", {"12"}), std::invalid_argument);
  CHECK_THROWS_AS(SftSpec("01", {""}), std::invalid_argument);
  CHECK(parse_forbidden_list("11,010") == std::vector<std::string>{"11", "010"});
  CHECK(parse_forbidden_list("").empty());
}

TEST_CASE("follower graph examples") {
  const auto golden = build_follower_graph(SftSpec("01", {"11"}));
  CHECK(golden.state_count() == 2);
  CHECK(golden.edge_count() == 3);
  CHECK(golden.is_essential());
  CHECK(is_irreducible(golden));

  const auto red = build_follower_graph(SftSpec("aAbB", kRedForbidden));
  CHECK(red.state_count() == 4);
  for (const auto& out : red.edges) CHECK(out.size() == 3);
  CHECK(is_irreducible(red));

  CHECK_THROWS_AS((void)build_follower_graph(SftSpec("01", {"00", "01", "10", "11"})), EmptyShiftError);

  // Two full shifts on {0,1} and {2,3} that never meet.
  const auto split = build_follower_graph(SftSpec("0123", {"02", "03", "12", "13", "20", "21", "30", "31"}));
  CHECK_FALSE(is_irreducible(split));
  CHECK_THROWS_AS((void)entropy(split), std::invalid_argument);

  // Nothing enters 2, so it is pruned.
  const auto transient = build_follower_graph(SftSpec("012", {"02", "12", "22"}));
  CHECK(transient.is_essential());
  CHECK(transient.state_count() == 2);
}

TEST_CASE("entropy examples") {
  const auto full = entropy(build_follower_graph(SftSpec("01", {})));
  CHECK(std::abs(full.entropy - std::log(2.0)) < 1e-12);
  const auto golden = entropy(build_follower_graph(SftSpec("01", {"11"})));
  CHECK(std::abs(golden.entropy - std::log((1 + std::sqrt(5.0)) / 2)) < 1e-8);
  const auto red = entropy(build_follower_graph(SftSpec("aAbB", kRedForbidden)));
  CHECK(std::abs(red.entropy - std::log(3.0)) < 1e-8);
  // Period 2: forbid 00 and 11.
  const auto alt = entropy(build_follower_graph(SftSpec("01", {"00", "11"})));
  CHECK(alt.period == 2);
  CHECK(std::abs(alt.entropy) < 1e-12);
  // Period 2 with positive entropy: from 0 one must go to {1,2}, and from {1,2} back to 0.
  const auto bip = entropy(build_follower_graph(SftSpec("012", {"00", "11", "12", "21", "22"})));
  CHECK(bip.period == 2);
  CHECK(std::abs(bip.entropy - std::log(std::sqrt(2.0))) < 1e-10);
}

TEST_CASE("non-convergence carries a bracket") {
  EntropyOptions tight;
  tight.tolerance = 0.0;
  tight.max_iterations = 5;
  try {
    (void)entropy(build_follower_graph(SftSpec("01", {"11"})), tight);
    FAIL("expected non-convergence");
  } catch (const NonConvergenceError& e) {
    CHECK(e.lower() <= (1 + std::sqrt(5.0)) / 2 + 1e-12);
    CHECK(e.upper() >= (1 + std::sqrt(5.0)) / 2 - 1e-12);
  }
}

TEST_CASE("exact counts against brute force") {
  CHECK(language_count(build_follower_graph(SftSpec("01", {"11"})), 5) == 13);
  // Words avoiding the forbidden set but not extendable on both sides are not
  // in the language, so brute force gives an upper bound in general.
  std::mt19937_64 rng(59);
  const std::string symbols = "0123";
  for (int trial = 0; trial < 30; ++trial) {
    const std::string alphabet = symbols.substr(0, 2 + rng() % 3);
    std::vector<std::string> forbidden;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      std::string f;
      const int len = 2 + static_cast<int>(rng() % 2);
      for (int j = 0; j < len; ++j) f.push_back(alphabet[rng() % alphabet.size()]);
      forbidden.push_back(f);
    }
    FollowerGraph g;
    try {
      g = build_follower_graph(SftSpec(alphabet, forbidden));
    } catch (const EmptyShiftError&) {
      continue;
    }
    const auto counts = language_counts(g, 8);
    for (int n = 0; n <= 8; ++n) {
      CHECK(counts[static_cast<std::size_t>(n)] <= oracle::sft_bruteforce_count(alphabet, forbidden, n));
    }
  }
  // Graphs without transient states: counts are exact.
  for (const auto& [alphabet, forbidden] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"01", {"11"}}, {"01", {"010"}}, {"012", {"00", "12", "21"}}, {"aAbB", kRedForbidden},
           {"0123", {"01", "23", "301"}}}) {
    const auto g = build_follower_graph(SftSpec(alphabet, forbidden));
    const auto counts = language_counts(g, 10);
    for (int n = 0; n <= 10; ++n) {
      CHECK(counts[static_cast<std::size_t>(n)] == oracle::sft_bruteforce_count(alphabet, forbidden, n));
    }
  }
}

TEST_CASE("entropy agrees with the count slope") {
  for (const auto& spec : {SftSpec("01", {"11"}), SftSpec("aAbB", kRedForbidden), SftSpec("012", {"00", "12", "21"})}) {
    const auto g = build_follower_graph(spec);
    CHECK(std::abs(entropy(g).entropy - entropy_slope(g, 2000)) < 1e-2);
  }
}

TEST_CASE("language membership") {
  const auto g = build_follower_graph(SftSpec("01", {"11"}));
  CHECK(in_language(g, ""));
  CHECK(in_language(g, "0100101"));
  CHECK_FALSE(in_language(g, "0110"));
  CHECK_FALSE(in_language(g, "02"));
}

TEST_CASE("nested decay") {
  const SftSpec red("aAbB", kRedForbidden);
  const SftSpec inner("aAbB", with(kRedForbidden, "ab"));
  const auto ratio = nested_decay(inner, red, 30);
  for (int n = 5; n < 30; ++n) CHECK(ratio[static_cast<std::size_t>(n) + 1] < ratio[static_cast<std::size_t>(n)]);
  // Growth rates 1+√3 against 3.
  const double lambda1 = entropy(build_follower_graph(inner)).perron;
  CHECK(std::abs(lambda1 - (1 + std::sqrt(3.0))) < 1e-8);
  for (int n = 20; n <= 30; ++n) {
    const double bound = std::pow(lambda1 / 3.0 * (1 + 1e-3), n);
    CHECK(ratio[static_cast<std::size_t>(n)].get_d() < 2 * bound);
  }

  for (const auto& q : nested_decay(red, red, 12)) CHECK(q == 1);

  try {
    (void)nested_decay(red, inner, 4);
    FAIL("expected an inclusion error");
  } catch (const InclusionError& e) {
    CHECK(e.witness() == "ab");
  }
}

TEST_CASE("avoiding a short reduced word decays against Red") {
  const SftSpec red("aAbB", kRedForbidden);
  const double log3 = std::log(3.0);
  for (int len = 1; len <= 3; ++len) {
    for (const auto& w : oracle::all_reduced(FreeAlphabet(2), len)) {
      const std::string s = to_string(w);
      const SftSpec inner("aAbB", with(kRedForbidden, s));
      const auto ratio = nested_decay(inner, red, 40);
      CHECK(ratio[40] < ratio[20]);
      CHECK(ratio[40] < ratio[30]);
      // Strictly smaller growth rate.
      const auto g = build_follower_graph(inner);
      if (is_irreducible(g)) CHECK(entropy(g).entropy < log3 - 1e-3);
    }
  }
}
