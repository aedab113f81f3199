#pragma once

// Whitehead automorphisms and bounded automorphic orbits in F_k, k <= 3.
//
// Orbits are kept as sets of cyclically reduced words. By peak reduction any
// two orbit elements of length <= B are joined by Whitehead moves through
// words of length <= B, so a breadth-first closure inside the bound reaches
// the whole bounded orbit.

#include "freedense/numbers.hpp"
#include "freedense/words.hpp"

#include <set>
#include <string>
#include <vector>

namespace freedense {

/// Largest length bound accepted by the orbit routines.
inline constexpr int kMaxOrbitBound = 14;

struct WhiteheadAuto {
  enum class Kind { TypeI, TypeII };

  Kind kind = Kind::TypeI;
  /// TypeI: generator i maps to generator permutation[i], inverted when inverted[i].
  std::vector<int> permutation;
  std::vector<bool> inverted;
  /// TypeII: the fixed multiplier a and, per generator x, a choice among
  /// 0: x, 1: xa, 2: a⁻¹x, 3: a⁻¹xa. The multiplier's own generator has choice 0.
  Letter multiplier;
  std::vector<int> choice;
  /// Image of each generator, reduced.
  std::vector<ReducedWord> images;

  [[nodiscard]] ReducedWord apply(const ReducedWord& w) const;
  [[nodiscard]] std::string to_string() const;
};

/// All 2^k k! TypeI and all non-identity TypeII automorphisms.
/// Throws std::invalid_argument for rank > 3.
[[nodiscard]] std::vector<WhiteheadAuto> whitehead_autos(const FreeAlphabet& alphabet);

struct OrbitSet {
  ReducedWord base;
  int length_bound = 0;
  std::set<ReducedWord> elements;

  /// counts[n] = number of elements of length n, n = 0..length_bound.
  [[nodiscard]] CountTable counts_by_length() const;
};

/// Closure of the cyclic core of g under Whitehead moves and rotations,
/// discarding words longer than `bound`. Throws std::invalid_argument when the
/// cyclic length of g exceeds bound, bound > kMaxOrbitBound, or rank > 3.
[[nodiscard]] OrbitSet orbit_bfs(const ReducedWord& g, int bound, const FreeAlphabet& alphabet);

/// Whitehead descent to a locally minimal cyclic word, then a search of its
/// length-preserving component; primitive iff length 1 is reached.
[[nodiscard]] bool is_primitive(const ReducedWord& w, const FreeAlphabet& alphabet);

/// True iff no element of orbit_bfs(g, bound) contains s as a cyclic factor.
[[nodiscard]] bool check_blocking(const ReducedWord& s, const ReducedWord& g, int bound,
                                  const FreeAlphabet& alphabet);

/// True iff s occurs in the cyclic word w (|s| <= |w|).
[[nodiscard]] bool contains_cyclic_factor(const ReducedWord& w, const ReducedWord& s);

/// |S' ∩ Σⁿ| for n = 0..bound, S' the reduced conjugates of the bounded orbit.
[[nodiscard]] CountTable orbit_closure_counts(const OrbitSet& orbit, const FreeAlphabet& alphabet);

/// Ball ratios |S' ∩ B(n)| / |B(n)| for n = 0..bound.
[[nodiscard]] std::vector<Rational> orbit_density_profile(const ReducedWord& g, int bound,
                                                          const FreeAlphabet& alphabet);

}  // namespace freedense
