#include "oracles.hpp"

#include <freedense/words.hpp>

#include <doctest.h>

#include <random>

using namespace freedense;

namespace {
const FreeAlphabet F2(2);
const FreeAlphabet F3(3);

Word w(const char* text) { return parse_word(text, F2); }
std::string s(const ReducedWord& r) { return to_string(r); }
}  // namespace

TEST_CASE("alphabet rank is bounded") {
  CHECK_THROWS_AS(FreeAlphabet(1), std::invalid_argument);
  CHECK_THROWS_AS(FreeAlphabet(27), std::invalid_argument);
  CHECK(FreeAlphabet(26).size() == 52);
  CHECK(F3.size() == 6);
}

TEST_CASE("letters invert and print") {
  const Letter a(0, +1);
  CHECK(a.inverse().inverse() == a);
  CHECK(a.to_char() == 'a');
  CHECK(a.inverse().to_char() == 'A');
  CHECK(Letter(2, -1).to_char() == 'C');
  CHECK(a < a.inverse());
  CHECK(a.inverse() < Letter(1, +1));
}

TEST_CASE("free reduction examples") {
  CHECK(s(free_reduce(w("abB"))) == "a");
  CHECK(free_reduce(w("aA")).empty());
  CHECK(free_reduce(w("aBbA")).empty());
  CHECK(s(free_reduce(w("abBBbA"))).empty());
  CHECK(s(free_reduce(w("abABba"))) == "ab");
}

TEST_CASE("free reduction agrees with the quadratic oracle") {
  std::mt19937_64 rng(7);
  const auto ls = oracle::letters(F2);
  for (int trial = 0; trial < 2000; ++trial) {
    Word x;
    const int len = static_cast<int>(rng() % 16);
    for (int i = 0; i < len; ++i) x.push_back(ls[rng() % ls.size()]);
    const ReducedWord r = free_reduce(x);
    CHECK(r.letters() == oracle::naive_reduce(x));
    CHECK(free_reduce(r.letters()) == r);
    CHECK(free_reduce(concat(x, inverse_word(x))).empty());
    CHECK(is_reduced(x) == oracle::adjacent_scan_reduced(x));
  }
}

TEST_CASE("ReducedWord rejects unreduced letters") {
  CHECK_THROWS_AS(ReducedWord::from_letters(w("abBa")), std::invalid_argument);
  CHECK(ReducedWord::from_letters(w("abab")).size() == 4);
}

TEST_CASE("cyclic decomposition examples") {
  auto check = [](const char* text, const char* prefix, const char* core) {
    const auto d = cyclic_decompose(parse_reduced(text, F2));
    CHECK(s(d.prefix) == prefix);
    CHECK(s(d.core) == core);
  };
  check("a", "", "a");
  check("abA", "a", "b");
  check("aabAA", "aa", "b");
  check("abab", "", "abab");
  check("", "", "");
}

TEST_CASE("cyclic decomposition reassembles without cancellation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto x = ReducedWord::from_letters(oracle::random_reduced(F2, static_cast<int>(rng() % 13), rng));
    const auto d = cyclic_decompose(x);
    Word joined = concat(concat(d.prefix.letters(), d.core.letters()), d.prefix.inverse().letters());
    CHECK(joined == x.letters());
    CHECK(is_cyclically_reduced(d.core.letters()));
    CHECK(d.core.letters() == oracle::naive_core(x.letters()));
    CHECK(d.prefix.empty() == is_cyclically_reduced(x.letters()));
  }
}

TEST_CASE("sphere and ball counts") {
  CHECK(count_reduced_sphere(F2, 0) == 1);
  CHECK(count_reduced_sphere(F2, 1) == 4);
  CHECK(count_reduced_sphere(F2, 3) == 36);
  CHECK(count_reduced_ball(F2, 0) == 1);
  CHECK(count_reduced_ball(F2, 2) == 17);
  CHECK(count_reduced_ball(F3, 1) == 7);
  CHECK_THROWS_AS((void)count_reduced_sphere(F2, -1), std::invalid_argument);
  CHECK_THROWS_AS((void)count_reduced_ball(F2, -1), std::invalid_argument);
  for (const FreeAlphabet& x : {F2, F3}) {
    for (int n = 0; n <= 8; ++n) {
      if (x.rank() == 3 && n > 6) break;
      CHECK(count_reduced_sphere(x, n) == static_cast<unsigned long>(oracle::all_reduced(x, n).size()));
    }
  }
}

TEST_CASE("reduced words of a length come out in shortlex order") {
  const auto words = reduced_words_of_length(F2, 3);
  CHECK(words.size() == 36);
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(shortlex_less(words[i - 1].letters(), words[i].letters()));
}

TEST_CASE("word parsing reports positions") {
  CHECK(parse_word("1", F2).empty());
  CHECK(parse_word("", F2).empty());
  try {
    (void)parse_word("abc", F2);
    FAIL("expected a syntax error");
  } catch (const WordSyntaxError& e) {
    CHECK(e.position() == 2);
  }
  try {
    (void)parse_word("a-b", F2);
    FAIL("expected a syntax error");
  } catch (const WordSyntaxError& e) {
    CHECK(e.position() == 1);
  }
  try {
    (void)parse_word_list("aa,ab,x", F2);
    FAIL("expected a syntax error");
  } catch (const WordSyntaxError& e) {
    CHECK(e.position() == 6);
  }
  const auto list = parse_word_list("aa,ab,aB", F2);
  REQUIRE(list.size() == 3);
  CHECK(s(list[2]) == "aB");
}
