#pragma once

// Letters, words and free reduction over X ∪ X⁻¹.
//
// Text syntax: lowercase 'a'..'z' is generator 0..25, the matching uppercase
// letter is its inverse. The empty word prints as "" and "1" also parses as ε.

#include "freedense/numbers.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace freedense {

/// Basis X = {x_1, ..., x_k} of a nonabelian free group. 2 <= k <= 26.
class FreeAlphabet {
 public:
  static constexpr int kMaxRank = 26;

  /// Throws std::invalid_argument for rank < 2 or rank > 26.
  explicit FreeAlphabet(int rank);

  [[nodiscard]] int rank() const noexcept { return rank_; }
  /// |Σ| = 2k.
  [[nodiscard]] int size() const noexcept { return 2 * rank_; }

  bool operator==(const FreeAlphabet&) const = default;

 private:
  int rank_;
};

/// A generator or its inverse, packed as 2 * generator + (inverse ? 1 : 0).
/// The packed order is (generator, +1 before -1).
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int sign) : code_(2 * generator + (sign < 0 ? 1 : 0)) {}

  static constexpr Letter from_code(int code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  [[nodiscard]] constexpr int generator() const noexcept { return code_ >> 1; }
  [[nodiscard]] constexpr int sign() const noexcept { return (code_ & 1) != 0 ? -1 : 1; }
  [[nodiscard]] constexpr int code() const noexcept { return code_; }
  [[nodiscard]] constexpr Letter inverse() const noexcept { return from_code(code_ ^ 1); }

  [[nodiscard]] char to_char() const noexcept;

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  int code_ = 0;
};

/// Possibly unreduced sequence of letters.
using Word = std::vector<Letter>;

/// Raised for malformed word text; carries the offending character offset.
class WordSyntaxError : public std::invalid_argument {
 public:
  WordSyntaxError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A freely reduced word: no adjacent pair ℓ, ℓ⁻¹.
class ReducedWord {
 public:
  ReducedWord() = default;

  /// Throws std::invalid_argument if `letters` is not freely reduced.
  static ReducedWord from_letters(Word letters);

  [[nodiscard]] const Word& letters() const noexcept { return letters_; }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] auto begin() const noexcept { return letters_.begin(); }
  [[nodiscard]] auto end() const noexcept { return letters_.end(); }

  /// Group inverse: reversed with every letter inverted (still reduced).
  [[nodiscard]] ReducedWord inverse() const;

  auto operator<=>(const ReducedWord&) const = default;
  bool operator==(const ReducedWord&) const = default;

 private:
  friend ReducedWord free_reduce(std::span<const Letter> w);
  explicit ReducedWord(Word letters) : letters_(std::move(letters)) {}

  Word letters_;
};

/// w = u · c · u⁻¹ with c cyclically reduced and no cancellation as written.
struct CyclicDecomposition {
  ReducedWord prefix;
  ReducedWord core;
};

[[nodiscard]] bool is_reduced(std::span<const Letter> w) noexcept;
[[nodiscard]] bool is_cyclically_reduced(std::span<const Letter> w) noexcept;

/// Unique freely reduced representative of w. Stack-based, linear time.
[[nodiscard]] ReducedWord free_reduce(std::span<const Letter> w);

/// Product in the free group.
[[nodiscard]] ReducedWord multiply(const ReducedWord& a, const ReducedWord& b);

[[nodiscard]] Word concat(std::span<const Letter> a, std::span<const Letter> b);
[[nodiscard]] Word inverse_word(std::span<const Letter> w);

[[nodiscard]] CyclicDecomposition cyclic_decompose(const ReducedWord& w);

/// Cyclically reduced core of a reduced word.
[[nodiscard]] ReducedWord cyclic_core(const ReducedWord& w);

/// Parses word text. Letters beyond the alphabet's rank are rejected.
/// "1" denotes the empty word.
[[nodiscard]] Word parse_word(std::string_view text, const FreeAlphabet& alphabet);

/// Parses and requires the result to be freely reduced already.
[[nodiscard]] ReducedWord parse_reduced(std::string_view text, const FreeAlphabet& alphabet);

/// Comma-separated list of words, e.g. "aa,ab,aB".
[[nodiscard]] std::vector<ReducedWord> parse_word_list(std::string_view text,
                                                       const FreeAlphabet& alphabet);

[[nodiscard]] std::optional<Letter> letter_from_char(char c) noexcept;

[[nodiscard]] std::string to_string(std::span<const Letter> w);
[[nodiscard]] std::string to_string(const ReducedWord& w);

/// |Σⁿ ∩ Red(X)|: 1 for n = 0, 2k(2k-1)^(n-1) otherwise.
[[nodiscard]] BigInt count_reduced_sphere(const FreeAlphabet& alphabet, long n);

/// Σ_{i<=n} count_reduced_sphere(i).
[[nodiscard]] BigInt count_reduced_ball(const FreeAlphabet& alphabet, long n);

/// All reduced words of length exactly n, in shortlex order.
[[nodiscard]] std::vector<ReducedWord> reduced_words_of_length(const FreeAlphabet& alphabet,
                                                               int n);

/// Shortlex comparison: length first, then letter codes.
[[nodiscard]] bool shortlex_less(std::span<const Letter> a, std::span<const Letter> b) noexcept;

}  // namespace freedense
