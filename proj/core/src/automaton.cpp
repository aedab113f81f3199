#include "freedense/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace freedense {

// ---------------------------------------------------------------------------
// Automaton

State Automaton::add_state() {
  arcs_.emplace_back();
  eps_.emplace_back();
  final_.push_back(0);
  return state_count() - 1;
}

State Automaton::add_states(int n) {
  const State first = state_count();
  for (int i = 0; i < n; ++i) add_state();
  return first;
}

void Automaton::check_state(State s) const {
  if (s < 0 || s >= state_count()) {
    throw std::out_of_range("state " + std::to_string(s) + " out of range");
  }
}

void Automaton::add_transition(State src, Letter label, State dst) {
  check_state(src);
  check_state(dst);
  if (label.generator() >= alphabet_.rank()) {
    throw std::invalid_argument("letter outside automaton alphabet");
  }
  auto& out = arcs_[src];
  const Arc arc{label, dst};
  if (std::find(out.begin(), out.end(), arc) == out.end()) out.push_back(arc);
}

void Automaton::add_epsilon(State src, State dst) {
  check_state(src);
  check_state(dst);
  if (src == dst) return;
  auto& out = eps_[src];
  if (std::find(out.begin(), out.end(), dst) == out.end()) out.push_back(dst);
}

void Automaton::add_initial(State s) {
  check_state(s);
  auto it = std::lower_bound(initial_.begin(), initial_.end(), s);
  if (it == initial_.end() || *it != s) initial_.insert(it, s);
}

void Automaton::set_final(State s, bool is_final) {
  check_state(s);
  final_[s] = is_final ? 1 : 0;
}

std::vector<State> Automaton::finals() const {
  std::vector<State> out;
  for (State s = 0; s < state_count(); ++s) {
    if (final_[s] != 0) out.push_back(s);
  }
  return out;
}

std::size_t Automaton::transition_count() const noexcept {
  std::size_t n = 0;
  for (const auto& v : arcs_) n += v.size();
  return n;
}

std::size_t Automaton::epsilon_count() const noexcept {
  std::size_t n = 0;
  for (const auto& v : eps_) n += v.size();
  return n;
}

bool Automaton::is_deterministic() const {
  if (initial_.size() > 1) return false;
  if (initial_.empty() && state_count() > 0) return false;
  for (State s = 0; s < state_count(); ++s) {
    if (!eps_[s].empty()) return false;
    std::vector<int> seen(static_cast<std::size_t>(alphabet_.size()), 0);
    for (const Arc& arc : arcs_[s]) {
      if (seen[arc.label.code()]++ != 0) return false;
    }
  }
  return true;
}

std::optional<State> Automaton::next(State s, Letter l) const {
  for (const Arc& arc : arcs_.at(s)) {
    if (arc.label == l) return arc.target;
  }
  return std::nullopt;
}

namespace {

std::vector<State> step(const Automaton& a, const std::vector<State>& from, Letter l) {
  std::vector<State> out;
  for (State s : from) {
    for (const Arc& arc : a.arcs(s)) {
      if (arc.label == l) out.push_back(arc.target);
    }
  }
  return epsilon_closure(a, std::move(out));
}

bool any_final(const Automaton& a, const std::vector<State>& states) {
  return std::any_of(states.begin(), states.end(), [&](State s) { return a.is_final(s); });
}

void require_same_alphabet(const Automaton& a, const Automaton& b) {
  if (a.alphabet() != b.alphabet()) {
    throw std::invalid_argument("automata over different alphabets (rank " +
                                std::to_string(a.alphabet().rank()) + " vs " +
                                std::to_string(b.alphabet().rank()) + ")");
  }
}

// Copies states and arcs; initial/final sets are copied only on request.
Automaton copy_structure(const Automaton& a, bool with_initial, bool with_final) {
  Automaton out(a.alphabet());
  out.add_states(a.state_count());
  for (State s = 0; s < a.state_count(); ++s) {
    for (const Arc& arc : a.arcs(s)) out.add_transition(s, arc.label, arc.target);
    for (State t : a.epsilons(s)) out.add_epsilon(s, t);
    if (with_final) out.set_final(s, a.is_final(s));
  }
  if (with_initial) {
    for (State s : a.initial()) out.add_initial(s);
  }
  return out;
}

// Appends `b` into `out` with state offset; returns the offset.
State append_disjoint(Automaton& out, const Automaton& b) {
  const State offset = out.add_states(b.state_count());
  for (State s = 0; s < b.state_count(); ++s) {
    for (const Arc& arc : b.arcs(s)) out.add_transition(offset + s, arc.label, offset + arc.target);
    for (State t : b.epsilons(s)) out.add_epsilon(offset + s, offset + t);
  }
  return offset;
}

// Keeps the states flagged in `keep`, preserving their relative order.
Automaton restrict_states(const Automaton& a, const std::vector<char>& keep) {
  std::vector<State> remap(static_cast<std::size_t>(a.state_count()), -1);
  Automaton out(a.alphabet());
  for (State s = 0; s < a.state_count(); ++s) {
    if (keep[s] != 0) remap[s] = out.add_state();
  }
  for (State s = 0; s < a.state_count(); ++s) {
    if (remap[s] < 0) continue;
    for (const Arc& arc : a.arcs(s)) {
      if (remap[arc.target] >= 0) out.add_transition(remap[s], arc.label, remap[arc.target]);
    }
    for (State t : a.epsilons(s)) {
      if (remap[t] >= 0) out.add_epsilon(remap[s], remap[t]);
    }
    out.set_final(remap[s], a.is_final(s));
  }
  for (State s : a.initial()) {
    if (remap[s] >= 0) out.add_initial(remap[s]);
  }
  return out;
}

std::vector<char> forward_reachable(const Automaton& a) {
  std::vector<char> seen(static_cast<std::size_t>(a.state_count()), 0);
  std::vector<State> stack(a.initial().begin(), a.initial().end());
  for (State s : stack) seen[s] = 1;
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    auto visit = [&](State t) {
      if (seen[t] == 0) {
        seen[t] = 1;
        stack.push_back(t);
      }
    };
    for (const Arc& arc : a.arcs(s)) visit(arc.target);
    for (State t : a.epsilons(s)) visit(t);
  }
  return seen;
}

std::vector<char> backward_reachable(const Automaton& a) {
  const auto n = static_cast<std::size_t>(a.state_count());
  std::vector<std::vector<State>> rev(n);
  for (State s = 0; s < a.state_count(); ++s) {
    for (const Arc& arc : a.arcs(s)) rev[arc.target].push_back(s);
    for (State t : a.epsilons(s)) rev[t].push_back(s);
  }
  std::vector<char> seen(n, 0);
  std::vector<State> stack;
  for (State s = 0; s < a.state_count(); ++s) {
    if (a.is_final(s)) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    for (State t : rev[s]) {
      if (seen[t] == 0) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

// Renumbers a DFA breadth-first from its initial state, letters in order.
Automaton canonical_numbering(const Automaton& dfa) {
  Automaton out(dfa.alphabet());
  if (dfa.initial().empty()) return out;
  std::vector<State> order(static_cast<std::size_t>(dfa.state_count()), -1);
  std::deque<State> queue{dfa.initial().front()};
  order[dfa.initial().front()] = out.add_state();
  std::vector<State> visited{dfa.initial().front()};
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    for (int c = 0; c < dfa.alphabet().size(); ++c) {
      const auto t = dfa.next(s, Letter::from_code(c));
      if (t && order[*t] < 0) {
        order[*t] = out.add_state();
        visited.push_back(*t);
        queue.push_back(*t);
      }
    }
  }
  for (State s : visited) {
    for (const Arc& arc : dfa.arcs(s)) out.add_transition(order[s], arc.label, order[arc.target]);
    out.set_final(order[s], dfa.is_final(s));
  }
  out.add_initial(0);
  return out;
}

}  // namespace

std::vector<State> epsilon_closure(const Automaton& a, std::vector<State> states) {
  std::vector<char> seen(static_cast<std::size_t>(a.state_count()), 0);
  std::vector<State> stack;
  for (State s : states) {
    if (seen[s] == 0) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  std::vector<State> out = stack;
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    for (State t : a.epsilons(s)) {
      if (seen[t] == 0) {
        seen[t] = 1;
        stack.push_back(t);
        out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Automaton::accepts(std::span<const Letter> w) const {
  std::vector<State> current = epsilon_closure(*this, initial_);
  for (Letter l : w) {
    if (current.empty()) return false;
    current = step(*this, current, l);
  }
  return any_final(*this, current);
}

// ---------------------------------------------------------------------------
// Constructions

Automaton reduced_word_automaton(const FreeAlphabet& alphabet) {
  Automaton a(alphabet);
  const State start = a.add_state();
  const State first = a.add_states(alphabet.size());  // state first + c: last letter had code c
  a.add_initial(start);
  a.set_final(start);
  for (int c = 0; c < alphabet.size(); ++c) {
    a.set_final(first + c);
    a.add_transition(start, Letter::from_code(c), first + c);
    for (int d = 0; d < alphabet.size(); ++d) {
      if (Letter::from_code(d) == Letter::from_code(c).inverse()) continue;
      a.add_transition(first + c, Letter::from_code(d), first + d);
    }
  }
  return a;
}

Automaton universal_automaton(const FreeAlphabet& alphabet) {
  Automaton a(alphabet);
  const State s = a.add_state();
  a.add_initial(s);
  a.set_final(s);
  for (int c = 0; c < alphabet.size(); ++c) a.add_transition(s, Letter::from_code(c), s);
  return a;
}

Automaton word_automaton(const FreeAlphabet& alphabet, std::span<const Letter> w) {
  Automaton a(alphabet);
  State s = a.add_state();
  a.add_initial(s);
  for (Letter l : w) {
    const State t = a.add_state();
    a.add_transition(s, l, t);
    s = t;
  }
  a.set_final(s);
  return a;
}

Automaton remove_epsilons(const Automaton& a) {
  if (a.epsilon_count() == 0) return a;
  Automaton out(a.alphabet());
  out.add_states(a.state_count());
  for (State s = 0; s < a.state_count(); ++s) {
    const auto closure = epsilon_closure(a, {s});
    for (State m : closure) {
      for (const Arc& arc : a.arcs(m)) out.add_transition(s, arc.label, arc.target);
    }
    out.set_final(s, any_final(a, closure));
  }
  for (State s : a.initial()) out.add_initial(s);
  return trim(out);
}

Automaton determinize(const Automaton& a) {
  Automaton out(a.alphabet());
  const auto start = epsilon_closure(a, a.initial());
  if (start.empty()) return out;

  std::map<std::vector<State>, State> index;
  std::vector<std::vector<State>> subsets;
  auto intern = [&](std::vector<State> subset) {
    auto [it, inserted] = index.emplace(subset, static_cast<State>(subsets.size()));
    if (inserted) {
      out.add_state();
      out.set_final(it->second, any_final(a, subset));
      subsets.push_back(std::move(subset));
    }
    return it->second;
  };
  out.add_initial(intern(start));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (int c = 0; c < a.alphabet().size(); ++c) {
      auto target = step(a, subsets[i], Letter::from_code(c));
      if (target.empty()) continue;
      const State t = intern(std::move(target));
      out.add_transition(static_cast<State>(i), Letter::from_code(c), t);
    }
  }
  return out;
}

Automaton minimize(const Automaton& a) {
  if (!a.is_deterministic()) {
    throw std::invalid_argument("minimize requires a deterministic automaton");
  }
  const Automaton t = trim(a);
  if (t.state_count() == 0) return t;

  const int n = t.state_count();
  const int sigma = t.alphabet().size();
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (State s = 0; s < n; ++s) cls[s] = t.is_final(s) ? 1 : 0;
  int class_count = -1;
  while (true) {
    std::map<std::vector<int>, int> signatures;
    std::vector<int> next_cls(static_cast<std::size_t>(n));
    for (State s = 0; s < n; ++s) {
      std::vector<int> sig;
      sig.reserve(static_cast<std::size_t>(sigma) + 1);
      sig.push_back(cls[s]);
      for (int c = 0; c < sigma; ++c) {
        const auto target = t.next(s, Letter::from_code(c));
        sig.push_back(target ? cls[*target] : -1);
      }
      auto [it, inserted] = signatures.emplace(std::move(sig), static_cast<int>(signatures.size()));
      next_cls[s] = it->second;
    }
    const int count = static_cast<int>(signatures.size());
    cls = std::move(next_cls);
    if (count == class_count) break;
    class_count = count;
  }

  Automaton quotient(t.alphabet());
  quotient.add_states(class_count);
  for (State s = 0; s < n; ++s) {
    for (const Arc& arc : t.arcs(s)) quotient.add_transition(cls[s], arc.label, cls[arc.target]);
    quotient.set_final(cls[s], t.is_final(s));
  }
  quotient.add_initial(cls[t.initial().front()]);
  return canonical_numbering(quotient);
}

Automaton trim(const Automaton& a) {
  const auto fwd = forward_reachable(a);
  const auto bwd = backward_reachable(a);
  std::vector<char> keep(fwd.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = (fwd[i] != 0 && bwd[i] != 0) ? 1 : 0;
  return restrict_states(a, keep);
}

Automaton intersect(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  const Automaton x = remove_epsilons(a);
  const Automaton y = remove_epsilons(b);
  Automaton out(a.alphabet());
  std::map<std::pair<State, State>, State> index;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    auto [it, inserted] = index.emplace(std::make_pair(p, q), static_cast<State>(pairs.size()));
    if (inserted) {
      out.add_state();
      out.set_final(it->second, x.is_final(p) && y.is_final(q));
      pairs.emplace_back(p, q);
    }
    return it->second;
  };
  for (State p : x.initial()) {
    for (State q : y.initial()) out.add_initial(intern(p, q));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    for (const Arc& ap : x.arcs(p)) {
      for (const Arc& aq : y.arcs(q)) {
        if (ap.label != aq.label) continue;
        const State t = intern(ap.target, aq.target);
        out.add_transition(static_cast<State>(i), ap.label, t);
      }
    }
  }
  return trim(out);
}

Automaton unite(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  Automaton out = copy_structure(a, true, true);
  const State offset = append_disjoint(out, b);
  for (State s = 0; s < b.state_count(); ++s) out.set_final(offset + s, b.is_final(s));
  for (State s : b.initial()) out.add_initial(offset + s);
  return out;
}

Automaton difference_within(const Automaton& domain, const Automaton& a) {
  require_same_alphabet(domain, a);
  const Automaton x = remove_epsilons(domain);
  const Automaton y = determinize(a);
  constexpr State kSink = -1;
  Automaton out(domain.alphabet());
  std::map<std::pair<State, State>, State> index;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    auto [it, inserted] = index.emplace(std::make_pair(p, q), static_cast<State>(pairs.size()));
    if (inserted) {
      out.add_state();
      const bool rejected_by_a = (q == kSink) || !y.is_final(q);
      out.set_final(it->second, x.is_final(p) && rejected_by_a);
      pairs.emplace_back(p, q);
    }
    return it->second;
  };
  const State y0 = y.initial().empty() ? kSink : y.initial().front();
  for (State p : x.initial()) out.add_initial(intern(p, y0));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    for (const Arc& ap : x.arcs(p)) {
      State qn = kSink;
      if (q != kSink) {
        if (auto t = y.next(q, ap.label)) qn = *t;
      }
      const State t = intern(ap.target, qn);
      out.add_transition(static_cast<State>(i), ap.label, t);
    }
  }
  return trim(out);
}

Automaton concatenate(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  Automaton out = copy_structure(a, true, false);
  const State offset = append_disjoint(out, b);
  for (State s = 0; s < b.state_count(); ++s) out.set_final(offset + s, b.is_final(s));
  for (State f : a.finals()) {
    for (State s : b.initial()) out.add_epsilon(f, offset + s);
  }
  return out;
}

Automaton factor_automaton(const Automaton& a) {
  Automaton t = trim(a);
  for (State s = 0; s < t.state_count(); ++s) {
    t.add_initial(s);
    t.set_final(s);
  }
  return t;
}

bool is_empty(const Automaton& a) { return trim(a).state_count() == 0; }

std::optional<Word> shortest_word(const Automaton& a) {
  const Automaton d = determinize(a);
  if (d.initial().empty()) return std::nullopt;
  const State start = d.initial().front();
  std::vector<State> parent(static_cast<std::size_t>(d.state_count()), -1);
  std::vector<Letter> via(static_cast<std::size_t>(d.state_count()));
  std::vector<char> seen(static_cast<std::size_t>(d.state_count()), 0);
  std::deque<State> queue{start};
  seen[start] = 1;
  // Queue order is shortlex order of access words, so the first final wins.
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    if (d.is_final(s)) {
      Word w;
      for (State u = s; u != start; u = parent[u]) w.push_back(via[u]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (int c = 0; c < d.alphabet().size(); ++c) {
      const auto t = d.next(s, Letter::from_code(c));
      if (t && seen[*t] == 0) {
        seen[*t] = 1;
        parent[*t] = s;
        via[*t] = Letter::from_code(c);
        queue.push_back(*t);
      }
    }
  }
  return std::nullopt;
}

Automaton left_quotient(const Automaton& a, std::span<const Letter> x) {
  std::vector<State> current = epsilon_closure(a, a.initial());
  for (Letter l : x) current = step(a, current, l);
  Automaton out = copy_structure(a, false, true);
  for (State s : current) out.add_initial(s);
  return out;
}

Automaton right_quotient(const Automaton& a, std::span<const Letter> x) {
  Automaton out = copy_structure(a, true, false);
  for (State s = 0; s < a.state_count(); ++s) {
    std::vector<State> current = epsilon_closure(a, {s});
    for (Letter l : x) {
      if (current.empty()) break;
      current = step(a, current, l);
    }
    out.set_final(s, any_final(a, current));
  }
  return out;
}

CountTable count_words(const Automaton& a, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  const Automaton d = a.is_deterministic() ? trim(a) : trim(determinize(a));
  CountTable table;
  table.counts.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  if (d.state_count() == 0) return table;

  const auto n = static_cast<std::size_t>(d.state_count());
  std::vector<BigInt> paths(n, BigInt(0));
  std::vector<BigInt> next(n, BigInt(0));
  paths[d.initial().front()] = 1;
  for (int len = 0; len <= n_max; ++len) {
    BigInt accepted = 0;
    for (State s = 0; s < d.state_count(); ++s) {
      if (d.is_final(s)) accepted += paths[s];
    }
    table.counts[len] = accepted;
    if (len == n_max) break;
    for (auto& v : next) v = 0;
    for (State s = 0; s < d.state_count(); ++s) {
      if (paths[s] == 0) continue;
      for (const Arc& arc : d.arcs(s)) next[arc.target] += paths[s];
    }
    std::swap(paths, next);
  }
  return table;
}

bool equivalent(const Automaton& a, const Automaton& b) {
  return is_empty(difference_within(a, b)) && is_empty(difference_within(b, a));
}

std::string to_text(const Automaton& a) {
  std::ostringstream out;
  out << "states " << a.state_count() << "\n";
  out << "initial";
  for (State s : a.initial()) out << ' ' << s;
  out << "\nfinal";
  for (State s : a.finals()) out << ' ' << s;
  out << "\n";
  for (State s = 0; s < a.state_count(); ++s) {
    for (const Arc& arc : a.arcs(s)) out << s << ' ' << arc.label.to_char() << ' ' << arc.target << "\n";
    for (State t : a.epsilons(s)) out << s << " 1 " << t << "\n";
  }
  return out.str();
}

Automaton from_text(const std::string& text, const FreeAlphabet& alphabet) {
  std::istringstream in(text);
  std::string line;
  auto fail = [](const std::string& why) -> void {
    throw std::invalid_argument("malformed automaton text: " + why);
  };
  Automaton a(alphabet);
  if (!std::getline(in, line)) fail("missing header");
  {
    std::istringstream hs(line);
    std::string kw;
    int n = -1;
    if (!(hs >> kw >> n) || kw != "states" || n < 0) fail("bad 'states' line");
    a.add_states(n);
  }
  for (const char* kw_expected : {"initial", "final"}) {
    if (!std::getline(in, line)) fail(std::string("missing '") + kw_expected + "' line");
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw != kw_expected) fail(std::string("expected '") + kw_expected + "'");
    int s = 0;
    while (ls >> s) {
      if (s < 0 || s >= a.state_count()) fail("state out of range");
      if (std::string(kw_expected) == "initial") {
        a.add_initial(s);
      } else {
        a.set_final(s);
      }
    }
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int src = -1;
    int dst = -1;
    std::string label;
    if (!(ls >> src >> label >> dst)) fail("bad transition line '" + line + "'");
    if (src < 0 || dst < 0 || src >= a.state_count() || dst >= a.state_count()) {
      fail("state out of range in '" + line + "'");
    }
    if (label == "1") {
      a.add_epsilon(src, dst);
      continue;
    }
    const Word w = parse_word(label, alphabet);
    if (w.size() != 1) fail("label must be a single letter in '" + line + "'");
    a.add_transition(src, w.front(), dst);
  }
  return a;
}

}  // namespace freedense
