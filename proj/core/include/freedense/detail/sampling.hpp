#pragma once

#include <random>

namespace freedense {

template <class Rng>
ReducedWord sample_reduced(const FreeAlphabet& alphabet, int n, Rng& rng) {
  if (n < 0) throw std::invalid_argument("sample length must be non-negative");
  Word w;
  w.reserve(static_cast<std::size_t>(n));
  const int sigma = alphabet.size();
  if (n > 0) {
    std::uniform_int_distribution<int> first(0, sigma - 1);
    w.push_back(Letter::from_code(first(rng)));
  }
  std::uniform_int_distribution<int> rest(0, sigma - 2);
  for (int i = 1; i < n; ++i) {
    // Skip over the one cancelling letter.
    int c = rest(rng);
    if (c >= w.back().inverse().code()) ++c;
    w.push_back(Letter::from_code(c));
  }
  return ReducedWord::from_letters(std::move(w));
}

}  // namespace freedense
