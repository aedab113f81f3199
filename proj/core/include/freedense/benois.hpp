#pragma once

// Reduced-word languages of rational subsets of free groups.
//
// For a regular language L over Σ, the set L̄ of reduced words representing
// elements of Lπ is again regular. It is obtained by saturating an automaton
// for L with ε-moves that short-circuit every ℓ·ℓ⁻¹ detour and then keeping
// only reduced words.

#include "freedense/automaton.hpp"
#include "freedense/words.hpp"

#include <span>

namespace freedense {

/// Adds ε-moves p → q whenever p --ℓ--> r, r ~ε~> s, s --ℓ⁻¹--> q, until no
/// new move appears. The result accepts every word accepted by `a`, and a
/// reduced word w is accepted iff w is the free reduction of some word of L(a).
[[nodiscard]] Automaton benois_saturate(const Automaton& a);

/// Minimal DFA for L̄ = { reduced w : wπ ∈ L(a)π }.
[[nodiscard]] Automaton reduced_language(const Automaton& a);

/// g ∈ L(a)π. Computes the reduced language on every call; callers testing
/// many words should call reduced_language once and use Automaton::accepts.
[[nodiscard]] bool subset_membership(const Automaton& a, const ReducedWord& g);

/// Flower automaton of ⟨gens⟩: one petal per generator and per inverse,
/// all through a single initial-and-final base state.
[[nodiscard]] Automaton flower_automaton(const FreeAlphabet& alphabet,
                                         std::span<const ReducedWord> gens);

}  // namespace freedense
