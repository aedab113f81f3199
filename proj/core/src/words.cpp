#include "freedense/words.hpp"

#include <algorithm>

namespace freedense {

FreeAlphabet::FreeAlphabet(int rank) : rank_(rank) {
  if (rank < 2) {
    throw std::invalid_argument("free group rank must be at least 2 (got " +
                                std::to_string(rank) + ")");
  }
  if (rank > kMaxRank) {
    throw std::invalid_argument("free group rank must be at most 26 (got " +
                                std::to_string(rank) + ")");
  }
}

char Letter::to_char() const noexcept {
  const char base = sign() > 0 ? 'a' : 'A';
  return static_cast<char>(base + generator());
}

std::optional<Letter> letter_from_char(char c) noexcept {
  if (c >= 'a' && c <= 'z') return Letter(c - 'a', +1);
  if (c >= 'A' && c <= 'Z') return Letter(c - 'A', -1);
  return std::nullopt;
}

bool is_reduced(std::span<const Letter> w) noexcept {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

bool is_cyclically_reduced(std::span<const Letter> w) noexcept {
  if (!is_reduced(w)) return false;
  return w.size() <= 1 || w.front() != w.back().inverse();
}

ReducedWord ReducedWord::from_letters(Word letters) {
  if (!is_reduced(letters)) {
    throw std::invalid_argument("word is not freely reduced: " + freedense::to_string(letters));
  }
  return ReducedWord(std::move(letters));
}

ReducedWord ReducedWord::inverse() const { return ReducedWord(inverse_word(letters_)); }

ReducedWord free_reduce(std::span<const Letter> w) {
  Word stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return ReducedWord(std::move(stack));
}

ReducedWord multiply(const ReducedWord& a, const ReducedWord& b) {
  return free_reduce(concat(a.letters(), b.letters()));
}

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word inverse_word(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

CyclicDecomposition cyclic_decompose(const ReducedWord& w) {
  const Word& s = w.letters();
  std::size_t lo = 0;
  std::size_t hi = s.size();
  // Peel matching (ℓ ... ℓ⁻¹) pairs from both ends.
  while (hi - lo >= 2 && s[lo] == s[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  Word prefix(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(lo));
  Word core(s.begin() + static_cast<std::ptrdiff_t>(lo),
            s.begin() + static_cast<std::ptrdiff_t>(hi));
  return {ReducedWord::from_letters(std::move(prefix)), ReducedWord::from_letters(std::move(core))};
}

ReducedWord cyclic_core(const ReducedWord& w) { return cyclic_decompose(w).core; }

Word parse_word(std::string_view text, const FreeAlphabet& alphabet) {
  Word out;
  if (text == "1") return out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto l = letter_from_char(text[i]);
    if (!l) {
      throw WordSyntaxError("unexpected character '" + std::string(1, text[i]) +
                                "' at position " + std::to_string(i),
                            i);
    }
    if (l->generator() >= alphabet.rank()) {
      throw WordSyntaxError("letter '" + std::string(1, text[i]) + "' at position " +
                                std::to_string(i) + " exceeds rank " +
                                std::to_string(alphabet.rank()),
                            i);
    }
    out.push_back(*l);
  }
  return out;
}

ReducedWord parse_reduced(std::string_view text, const FreeAlphabet& alphabet) {
  Word w = parse_word(text, alphabet);
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) {
      throw WordSyntaxError("word '" + std::string(text) + "' is not freely reduced at position " +
                                std::to_string(i),
                            i);
    }
  }
  return ReducedWord::from_letters(std::move(w));
}

std::vector<ReducedWord> parse_word_list(std::string_view text, const FreeAlphabet& alphabet) {
  std::vector<ReducedWord> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_reduced(item, alphabet));
    } catch (const WordSyntaxError& e) {
      throw WordSyntaxError(e.what(), start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(std::span<const Letter> w) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(l.to_char());
  return out;
}

std::string to_string(const ReducedWord& w) { return to_string(w.letters()); }

BigInt count_reduced_sphere(const FreeAlphabet& alphabet, long n) {
  if (n < 0) throw std::invalid_argument("sphere radius must be non-negative");
  if (n == 0) return 1;
  const unsigned long k = static_cast<unsigned long>(alphabet.rank());
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2 * k - 1, static_cast<unsigned long>(n - 1));
  return BigInt(2 * k) * p;
}

BigInt count_reduced_ball(const FreeAlphabet& alphabet, long n) {
  if (n < 0) throw std::invalid_argument("ball radius must be non-negative");
  BigInt total = 0;
  for (long i = 0; i <= n; ++i) total += count_reduced_sphere(alphabet, i);
  return total;
}

std::vector<ReducedWord> reduced_words_of_length(const FreeAlphabet& alphabet, int n) {
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  std::vector<Word> layer{Word{}};
  for (int i = 0; i < n; ++i) {
    std::vector<Word> next;
    next.reserve(layer.size() * static_cast<std::size_t>(alphabet.size() - 1));
    for (const Word& w : layer) {
      for (int c = 0; c < alphabet.size(); ++c) {
        const Letter l = Letter::from_code(c);
        if (!w.empty() && w.back() == l.inverse()) continue;
        Word x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
  std::vector<ReducedWord> out;
  out.reserve(layer.size());
  for (Word& w : layer) out.push_back(ReducedWord::from_letters(std::move(w)));
  return out;
}

bool shortlex_less(std::span<const Letter> a, std::span<const Letter> b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace freedense
