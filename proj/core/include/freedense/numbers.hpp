#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace freedense {

/// Arbitrary-precision integer used for every exact word count.
using BigInt = mpz_class;

/// Exact rational used for every density ratio.
using Rational = mpq_class;

/// Formats a rational as "p/q", always with an explicit denominator.
std::string to_string(const Rational& q);

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

std::string to_string(const BigInt& z);

/// Per-length word counts: entry[n] is the number of accepted words of length n.
struct CountTable {
  std::vector<BigInt> counts;

  [[nodiscard]] int length_max() const noexcept {
    return static_cast<int>(counts.size()) - 1;
  }
  [[nodiscard]] const BigInt& operator[](std::size_t n) const { return counts.at(n); }

  bool operator==(const CountTable&) const = default;
};

}  // namespace freedense
