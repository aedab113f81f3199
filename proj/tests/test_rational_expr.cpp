#include "oracles.hpp"

#include <freedense/rational_expr.hpp>

#include <doctest.h>

#include <random>

using namespace freedense;

namespace {
const FreeAlphabet F2(2);
using E = RationalExpr;
E sym(const char* c) { return E::symbol(parse_word(c, F2).front()); }

// Random expression with a bounded number of leaves and star height <= stars.
E random_expr(std::mt19937_64& rng, int leaves, int stars) {
  if (leaves <= 1) {
    const int pick = static_cast<int>(rng() % 10);
    if (pick == 0) return E::epsilon();
    const auto ls = oracle::letters(F2);
    return E::symbol(ls[rng() % ls.size()]);
  }
  const bool starred = stars > 0 && rng() % 3 == 0;
  const int inner = starred ? stars - 1 : stars;
  const int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(leaves - 1));
  E a = random_expr(rng, left, inner);
  E b = random_expr(rng, leaves - left, inner);
  E out = (rng() % 2 == 0) ? E::concat({a, b}) : E::alternation({a, b});
  return starred ? E::star(out) : out;
}
}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse_expr("(aa|b)*", F2) == E::star(E::alternation({E::concat({sym("a"), sym("a")}), sym("b")})));
  CHECK(parse_expr("aA", F2) == E::concat({sym("a"), sym("A")}));
  CHECK(parse_expr("a(b|B)*a", F2) == E::concat({sym("a"), E::star(E::alternation({sym("b"), sym("B")})), sym("a")}));
  CHECK(parse_expr("a+b", F2) == parse_expr("a|b", F2));
  CHECK(parse_expr(" a  b ", F2) == parse_expr("ab", F2));
  CHECK(parse_expr("1", F2) == E::epsilon());
  CHECK(parse_expr("0", F2) == E::empty_set());
  CHECK(parse_expr("a**", F2) == E::star(E::star(sym("a"))));
}

TEST_CASE("syntax errors carry positions") {
  auto position_of = [](const char* text) -> long {
    try {
      (void)parse_expr(text, F2);
    } catch (const ExprSyntaxError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("a(b") == 3);
  CHECK(position_of("a|") == 2);
  CHECK(position_of("ac") == 1);
  CHECK(position_of(")") == 0);
  CHECK(position_of("*a") == 0);
  CHECK(position_of("") == 0);
}

TEST_CASE("compiled automata recognise formal words") {
  const auto nfa = compile_to_nfa(parse_expr("(aa|b)*", F2), F2);
  CHECK(nfa.accepts(parse_word("aab", F2)));
  CHECK_FALSE(nfa.accepts(parse_word("ab", F2)));
  const auto eps = compile_to_nfa(E::epsilon(), F2);
  CHECK(eps.accepts(Word{}));
  CHECK_FALSE(eps.accepts(parse_word("a", F2)));
  const auto inv = compile_to_nfa(parse_expr("aA", F2), F2);
  CHECK(inv.accepts(parse_word("aA", F2)));
  CHECK_FALSE(inv.accepts(Word{}));
  CHECK(is_empty(compile_to_nfa(E::empty_set(), F2)));
}

TEST_CASE("compiled membership matches syntax-tree expansion") {
  std::mt19937_64 rng(3);
  std::vector<std::vector<Word>> words;
  for (int n = 0; n <= 6; ++n) words.push_back(oracle::all_words(F2, n));
  for (int trial = 0; trial < 40; ++trial) {
    const E e = random_expr(rng, 2 + static_cast<int>(rng() % 8), 2);
    CHECK(star_height(e) <= 2);
    const auto nfa = compile_to_nfa(e, F2);
    const auto expected = oracle::expand(e, 6);
    for (const auto& layer : words) {
      for (const auto& x : layer) {
        const bool want = expected.count(x) != 0;
        if (nfa.accepts(x) != want) {
          FAIL_CHECK("mismatch on " << to_string(x) << " for " << to_string(e));
        }
        if (oracle::naive_accepts(nfa, x) != want) FAIL_CHECK("backtracking mismatch on " << to_string(x));
      }
    }
  }
}

TEST_CASE("print then parse is a fixpoint") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const E e = random_expr(rng, 1 + static_cast<int>(rng() % 12), 2);
    const E back = parse_expr(to_string(e), F2);
    CHECK(back == e);
  }
  for (const char* text : {"(aa|b)*", "a(b|B)*a", "1|0", "(a|b)(A|B)*", "((ab)*)*"}) {
    const E e = parse_expr(text, F2);
    CHECK(parse_expr(to_string(e), F2) == e);
  }
}

TEST_CASE("star height") {
  CHECK(star_height(parse_expr("ab", F2)) == 0);
  CHECK(star_height(parse_expr("(a*b)*", F2)) == 2);
  CHECK(star_height(parse_expr("a*b*", F2)) == 1);
}
