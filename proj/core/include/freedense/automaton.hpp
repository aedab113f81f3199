#pragma once

// Finite automata over Σ = X ∪ X⁻¹.
//
// Automata are partial: a missing transition means the run dies. Every
// operation returns a fresh automaton; inputs are never modified.

#include "freedense/numbers.hpp"
#include "freedense/words.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace freedense {

using State = int;

struct Arc {
  Letter label;
  State target;

  bool operator==(const Arc&) const = default;
};

class Automaton {
 public:
  explicit Automaton(FreeAlphabet alphabet) : alphabet_(alphabet) {}

  [[nodiscard]] const FreeAlphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] int state_count() const noexcept { return static_cast<int>(arcs_.size()); }

  State add_state();
  /// Adds `n` states and returns the index of the first.
  State add_states(int n);

  /// Duplicate arcs are ignored.
  void add_transition(State src, Letter label, State dst);
  void add_epsilon(State src, State dst);
  void add_initial(State s);
  void set_final(State s, bool is_final = true);

  [[nodiscard]] std::span<const Arc> arcs(State s) const { return arcs_.at(s); }
  [[nodiscard]] std::span<const State> epsilons(State s) const { return eps_.at(s); }
  [[nodiscard]] const std::vector<State>& initial() const noexcept { return initial_; }
  [[nodiscard]] bool is_final(State s) const { return final_.at(s) != 0; }
  [[nodiscard]] std::vector<State> finals() const;

  [[nodiscard]] std::size_t transition_count() const noexcept;
  [[nodiscard]] std::size_t epsilon_count() const noexcept;

  /// At most one initial state, no ε-moves, at most one arc per (state, letter).
  /// The zero-state automaton (empty language) counts as deterministic.
  [[nodiscard]] bool is_deterministic() const;

  /// Deterministic successor; assumes at most one arc per letter.
  [[nodiscard]] std::optional<State> next(State s, Letter l) const;

  /// Membership of a formal word (no free reduction).
  [[nodiscard]] bool accepts(std::span<const Letter> w) const;
  [[nodiscard]] bool accepts(const ReducedWord& w) const { return accepts(w.letters()); }

 private:
  void check_state(State s) const;

  FreeAlphabet alphabet_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::vector<State>> eps_;
  std::vector<State> initial_;
  std::vector<char> final_;
};

/// ε-closure of a set of states, returned sorted and deduplicated.
[[nodiscard]] std::vector<State> epsilon_closure(const Automaton& a, std::vector<State> states);

/// Deterministic, trim, 2k+1 states: a start state plus one per last-read letter.
[[nodiscard]] Automaton reduced_word_automaton(const FreeAlphabet& alphabet);

/// Σ*: one state, final, looping on every letter.
[[nodiscard]] Automaton universal_automaton(const FreeAlphabet& alphabet);

/// Accepts exactly the formal word w.
[[nodiscard]] Automaton word_automaton(const FreeAlphabet& alphabet, std::span<const Letter> w);

[[nodiscard]] Automaton remove_epsilons(const Automaton& a);

/// Subset construction over reachable subsets only.
[[nodiscard]] Automaton determinize(const Automaton& a);

/// Minimal partial DFA (trim, then Moore refinement where a missing arc is a
/// distinguishing behaviour). Throws std::invalid_argument if `a` is not deterministic.
[[nodiscard]] Automaton minimize(const Automaton& a);

/// Keeps states that are both accessible and co-accessible.
[[nodiscard]] Automaton trim(const Automaton& a);

[[nodiscard]] Automaton intersect(const Automaton& a, const Automaton& b);
[[nodiscard]] Automaton unite(const Automaton& a, const Automaton& b);
/// L(domain) ∖ L(a).
[[nodiscard]] Automaton difference_within(const Automaton& domain, const Automaton& a);
/// L(a) · L(b) as formal words.
[[nodiscard]] Automaton concatenate(const Automaton& a, const Automaton& b);

/// Every state of trim(a) made initial and final: the factors of L(a).
[[nodiscard]] Automaton factor_automaton(const Automaton& a);

[[nodiscard]] bool is_empty(const Automaton& a);

/// Shortest accepted word; ties broken by letter order (generator, then +1 before -1).
[[nodiscard]] std::optional<Word> shortest_word(const Automaton& a);

/// x⁻¹L = {y : xy ∈ L}.
[[nodiscard]] Automaton left_quotient(const Automaton& a, std::span<const Letter> x);
/// L x⁻¹ = {y : yx ∈ L}.
[[nodiscard]] Automaton right_quotient(const Automaton& a, std::span<const Letter> x);

/// Exact |L(a) ∩ Σⁿ| for n = 0..n_max by transfer-matrix dynamic programming.
/// Nondeterministic input is determinized first.
[[nodiscard]] CountTable count_words(const Automaton& a, int n_max);

/// Language equality, decided exactly through the product construction.
[[nodiscard]] bool equivalent(const Automaton& a, const Automaton& b);

/// Line-oriented dump:
///   states N
///   initial i ...
///   final f ...
///   src letter dst      (one per arc; letter "1" marks an ε-move)
[[nodiscard]] std::string to_text(const Automaton& a);
[[nodiscard]] Automaton from_text(const std::string& text, const FreeAlphabet& alphabet);

}  // namespace freedense
