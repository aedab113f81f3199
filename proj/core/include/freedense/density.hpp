#pragma once

// Exact relative densities of languages of reduced words.
//
// For L1, L2 ⊆ Σ* the sphere ratio at n is |Σⁿ∩L1| / |Σⁿ∩L2| and the ball
// ratio is the same quotient of cumulative counts up to n. Everything here is
// exact; floating point only appears in Monte Carlo estimates.

#include "freedense/automaton.hpp"
#include "freedense/numbers.hpp"
#include "freedense/stallings.hpp"
#include "freedense/words.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace freedense {

/// Entry n is nullopt when the ratio is undefined (zero denominator).
using RatioSequence = std::vector<std::optional<Rational>>;

struct DensitySequences {
  int n_max = 0;
  CountTable numerator;    // |Σⁿ ∩ L1|
  CountTable denominator;  // |Σⁿ ∩ L2|
  RatioSequence sphere_ratio;
  RatioSequence ball_ratio;
  /// cesaro_sphere[n] = (1/n) Σ_{i<n} sphere_ratio[i]; entry 0 is undefined.
  RatioSequence cesaro_sphere;
  /// cesaro_ball[n] = (1/n) Σ_{i<n} ball_ratio[i], balls B(0) = {ε} onwards.
  RatioSequence cesaro_ball;
  /// Some defined ratio exceeds 1 (L1 ⊄ L2).
  bool exceeds_one = false;
};

[[nodiscard]] DensitySequences density_sequences(const Automaton& l1, const Automaton& l2, int n_max);

/// Outcome of the forbidden-factor test.
struct ZeroDensityResult {
  bool zero = false;
  /// Shortest reduced w with Σ*wΣ* ∩ L = ∅, when zero.
  std::optional<ReducedWord> witness;
};

/// L is intersected with Red(X) first. Zero iff some reduced word is not a
/// factor of L; the witness is the shortlex-least such word.
[[nodiscard]] ZeroDensityResult is_zero_density(const Automaton& l);

/// Re-checks a witness: true iff no word of L contains w as a factor.
[[nodiscard]] bool is_forbidden_factor(const Automaton& l, const ReducedWord& w);

/// The translate left · S · right of a rational subset S.
struct CoverPair {
  ReducedWord left;
  ReducedWord right;

  auto operator<=>(const CoverPair&) const = default;
  bool operator==(const CoverPair&) const = default;
};

/// With A the minimal DFA of L̄ = L ∩ Red(X), for each state q take the shortlex
/// shortest i_q (initial → q) and f_q (q → final). Returns the distinct pairs
/// (i_q⁻¹, f_q'⁻¹) over all q, q', so F(X) = ⋃ i_q⁻¹ · S · f_q'⁻¹.
/// Throws std::domain_error when L has density zero.
[[nodiscard]] std::vector<CoverPair> positive_density_cover(const Automaton& l);

struct CoverCheck {
  bool covered = false;
  std::optional<ReducedWord> counterexample;  // shortlex-least uncovered word
};

/// Checks every reduced word of length <= bound lies in some left · Lπ · right.
/// Each translate is built as word · L · word and passed through Benois reduction.
[[nodiscard]] CoverCheck verify_cover(const Automaton& l, const std::vector<CoverPair>& pairs, int bound);

/// Greedily drops pairs while the cover still verifies at `bound`. Removing any
/// single remaining pair fails verification at that bound.
[[nodiscard]] std::vector<CoverPair> minimal_cover(const Automaton& l, std::vector<CoverPair> pairs,
                                                   int bound);

/// Finite-horizon tail of a ratio sequence split by residue mod 1 and 2.
struct TailSummary {
  /// Last defined value per residue class: [0] for mod 1; [1], [2] for residues 0, 1 mod 2.
  std::vector<std::optional<Rational>> last;
  /// |last - previous| in each residue class is below 1e-6.
  bool stabilized_mod1 = false;
  bool stabilized_mod2 = false;
};

[[nodiscard]] TailSummary tail_summary(const RatioSequence& seq);

enum class DensityKind { Zero, Positive };

struct DensityClassification {
  DensityKind kind = DensityKind::Zero;
  std::optional<ReducedWord> witness;  // Zero
  std::vector<CoverPair> cover;        // Positive
  SubgroupIndex index = SubgroupIndex::infinite();
  bool converges = true;
  Rational sphere_sup;
  Rational sphere_inf;
  Rational ball_sup;
  Rational ball_inf;
  Rational average;
  Rational weak;
  int period = 0;  // walk period for finite index, 0 otherwise
  bool bipartite = false;
  DensitySequences sequences;
};

/// Closed-form densities of H = ⟨gens⟩ relative to Red(X), with exact
/// sequences up to n_max attached.
///   infinite index        : zero, witness, all values 0.
///   index m, not bipartite: converges; every value 1/m.
///   index m, bipartite    : sphere sup 2/m, inf 0; ball sup (2k-1)/(mk),
///                           ball inf 1/(mk); average and weak 1/m.
[[nodiscard]] DensityClassification subgroup_density(const StallingsGraph& g, int n_max);

/// Counts of S' = { u⁻¹ s u reduced : s ∈ S } from per-length counts of a set S
/// of cyclically reduced words.
struct CoreClosureCounts {
  /// Exact: a length-ℓ core contributes 1 word at depth 0 and
  /// (2k-2)(2k-1)^(m-1) words at conjugation depth m >= 1.
  CountTable exact;
  /// Σ_i |S ∩ Σ^(n-2i)| (2k-1)^i over the same-parity lengths (excluding ℓ = 0
  /// for even n), which bounds `exact` from above.
  CountTable sum_upper_bound;
};

[[nodiscard]] CoreClosureCounts cycred_closure_counts(const CountTable& core_counts,
                                                      const FreeAlphabet& alphabet, int n_max);

struct MonteCarloEstimate {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;
  double standard_error = 0.0;  // binomial, sqrt(p(1-p)/trials)
};

/// Uniform element of Σⁿ ∩ Red(X): first letter uniform over 2k, then uniform
/// over the 2k-1 non-cancelling letters.
template <class Rng>
ReducedWord sample_reduced(const FreeAlphabet& alphabet, int n, Rng& rng);

/// Convenience overload seeding a fresh generator.
[[nodiscard]] ReducedWord sample_reduced(const FreeAlphabet& alphabet, int n, std::uint64_t seed);

/// Fraction of uniform reduced words of length n accepted by `l`.
/// Trials are split into fixed blocks seeded from (seed, block), so the result
/// does not depend on `workers`.
[[nodiscard]] MonteCarloEstimate monte_carlo_density(const Automaton& l, int n, std::uint64_t trials,
                                                     std::uint64_t seed, unsigned workers = 1);

}  // namespace freedense

#include "freedense/detail/sampling.hpp"
