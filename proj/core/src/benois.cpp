#include "freedense/benois.hpp"

#include <stdexcept>
#include <vector>

namespace freedense {

Automaton benois_saturate(const Automaton& a) {
  Automaton out = a;
  const int n = out.state_count();
  bool changed = true;
  while (changed) {
    changed = false;
    // reach[s] is the ε-closure of s at the start of this round.
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(n),
                                         std::vector<char>(static_cast<std::size_t>(n), 0));
    for (State s = 0; s < n; ++s) {
      for (State t : epsilon_closure(out, {s})) reach[s][t] = 1;
    }
    for (State p = 0; p < n; ++p) {
      const std::vector<Arc> arcs(out.arcs(p).begin(), out.arcs(p).end());
      for (const Arc& first : arcs) {
        const Letter back = first.label.inverse();
        for (State s = 0; s < n; ++s) {
          if (reach[first.target][s] == 0) continue;
          for (const Arc& second : out.arcs(s)) {
            if (second.label != back || reach[p][second.target] != 0) continue;
            out.add_epsilon(p, second.target);
            reach[p][second.target] = 1;
            changed = true;
          }
        }
      }
    }
  }
  return out;
}

Automaton reduced_language(const Automaton& a) {
  const Automaton saturated = remove_epsilons(benois_saturate(trim(a)));
  const Automaton reduced = intersect(saturated, reduced_word_automaton(a.alphabet()));
  return minimize(determinize(trim(reduced)));
}

bool subset_membership(const Automaton& a, const ReducedWord& g) {
  return reduced_language(a).accepts(g);
}

Automaton flower_automaton(const FreeAlphabet& alphabet, std::span<const ReducedWord> gens) {
  Automaton a(alphabet);
  const State base = a.add_state();
  a.add_initial(base);
  a.set_final(base);
  auto add_petal = [&](const Word& w) {
    if (w.empty()) return;
    State cursor = base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const State next = (i + 1 == w.size()) ? base : a.add_state();
      a.add_transition(cursor, w[i], next);
      cursor = next;
    }
  };
  for (const ReducedWord& g : gens) {
    for (Letter l : g) {
      if (l.generator() >= alphabet.rank()) throw std::invalid_argument("generator outside alphabet");
    }
    add_petal(g.letters());
    add_petal(g.inverse().letters());
  }
  return a;
}

}  // namespace freedense
