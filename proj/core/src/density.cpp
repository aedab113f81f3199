#include "freedense/density.hpp"

#include "freedense/benois.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

namespace freedense {

namespace {

Rational ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt power(unsigned long base, unsigned long exp) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, exp);
  return p;
}

RatioSequence cesaro(const RatioSequence& seq) {
  RatioSequence out(seq.size());
  Rational sum = 0;
  bool defined = true;
  for (std::size_t n = 1; n < seq.size(); ++n) {
    if (!seq[n - 1]) defined = false;
    if (!defined) break;
    sum += *seq[n - 1];
    out[n] = Rational(sum / static_cast<long>(n));
  }
  return out;
}

Automaton with_initial(const Automaton& a, State q) {
  Automaton out(a.alphabet());
  out.add_states(a.state_count());
  for (State s = 0; s < a.state_count(); ++s) {
    for (const Arc& arc : a.arcs(s)) out.add_transition(s, arc.label, arc.target);
    out.set_final(s, a.is_final(s));
  }
  out.add_initial(q);
  return out;
}

Automaton reduced_part(const Automaton& l) {
  return minimize(determinize(intersect(l, reduced_word_automaton(l.alphabet()))));
}

// Dense transition table of a DFA; -1 is the dead state.
struct DenseDfa {
  int sigma = 0;
  int start = -1;
  std::vector<int> table;
  std::vector<char> accepting;

  explicit DenseDfa(const Automaton& dfa) : sigma(dfa.alphabet().size()) {
    const auto n = static_cast<std::size_t>(dfa.state_count());
    table.assign(n * static_cast<std::size_t>(sigma), -1);
    accepting.assign(n, 0);
    for (State s = 0; s < dfa.state_count(); ++s) {
      accepting[s] = dfa.is_final(s) ? 1 : 0;
      for (const Arc& arc : dfa.arcs(s)) table[static_cast<std::size_t>(s) * sigma + arc.label.code()] = arc.target;
    }
    if (!dfa.initial().empty()) start = dfa.initial().front();
  }
  [[nodiscard]] int next(int s, int code) const {
    return s < 0 ? -1 : table[static_cast<std::size_t>(s) * sigma + code];
  }
  [[nodiscard]] bool accepts(int s) const { return s >= 0 && accepting[s] != 0; }
};

class CoverChecker {
 public:
  CoverChecker(const Automaton& l, const std::vector<CoverPair>& pairs) : alphabet_(l.alphabet()) {
    translates_.reserve(pairs.size());
    for (const CoverPair& p : pairs) {
      const Automaton left = word_automaton(alphabet_, p.left.letters());
      const Automaton right = word_automaton(alphabet_, p.right.letters());
      translates_.emplace_back(reduced_language(concatenate(left, concatenate(l, right))));
    }
  }

  // Checks the translates flagged in `use`.
  CoverCheck check(const std::vector<char>& use, int bound) const {
    std::vector<int> active;
    for (std::size_t i = 0; i < translates_.size(); ++i) {
      if (use[i] != 0) active.push_back(static_cast<int>(i));
    }
    CoverCheck result;
    result.covered = true;
    Word word;
    std::vector<int> states(active.size());
    for (std::size_t j = 0; j < active.size(); ++j) states[j] = translates_[active[j]].start;
    dfs(active, states, word, bound, result);
    return result;
  }

 private:
  void dfs(const std::vector<int>& active, const std::vector<int>& states, Word& word, int bound,
           CoverCheck& result) const {
    bool hit = false;
    for (std::size_t j = 0; j < active.size() && !hit; ++j) hit = translates_[active[j]].accepts(states[j]);
    if (!hit) {
      result.covered = false;
      if (!result.counterexample || shortlex_less(word, result.counterexample->letters())) {
        result.counterexample = ReducedWord::from_letters(word);
      }
    }
    if (static_cast<int>(word.size()) == bound) return;
    // Longer words cannot beat a counterexample already found at this length.
    if (result.counterexample && result.counterexample->size() <= word.size()) return;
    std::vector<int> next(states.size());
    for (int c = 0; c < alphabet_.size(); ++c) {
      const Letter l = Letter::from_code(c);
      if (!word.empty() && word.back() == l.inverse()) continue;
      for (std::size_t j = 0; j < active.size(); ++j) next[j] = translates_[active[j]].next(states[j], c);
      word.push_back(l);
      dfs(active, next, word, bound, result);
      word.pop_back();
    }
  }

  FreeAlphabet alphabet_;
  std::vector<DenseDfa> translates_;
};

}  // namespace

DensitySequences density_sequences(const Automaton& l1, const Automaton& l2, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  DensitySequences d;
  d.n_max = n_max;
  d.numerator = count_words(l1, n_max);
  d.denominator = count_words(l2, n_max);
  const auto size = static_cast<std::size_t>(n_max) + 1;
  d.sphere_ratio.resize(size);
  d.ball_ratio.resize(size);
  BigInt ball_num = 0;
  BigInt ball_den = 0;
  for (std::size_t n = 0; n < size; ++n) {
    ball_num += d.numerator[n];
    ball_den += d.denominator[n];
    if (d.denominator[n] != 0) d.sphere_ratio[n] = ratio(d.numerator[n], d.denominator[n]);
    if (ball_den != 0) d.ball_ratio[n] = ratio(ball_num, ball_den);
    for (const auto* r : {&d.sphere_ratio[n], &d.ball_ratio[n]}) {
      if (*r && **r > 1) d.exceeds_one = true;
    }
  }
  d.cesaro_sphere = cesaro(d.sphere_ratio);
  d.cesaro_ball = cesaro(d.ball_ratio);
  return d;
}

ZeroDensityResult is_zero_density(const Automaton& l) {
  const Automaton red = reduced_word_automaton(l.alphabet());
  const Automaton reduced = intersect(l, red);
  const Automaton missing = difference_within(red, factor_automaton(reduced));
  ZeroDensityResult result;
  if (auto w = shortest_word(missing)) {
    result.zero = true;
    result.witness = ReducedWord::from_letters(std::move(*w));
  }
  return result;
}

bool is_forbidden_factor(const Automaton& l, const ReducedWord& w) {
  const FreeAlphabet& alphabet = l.alphabet();
  const Automaton any = universal_automaton(alphabet);
  const Automaton containing = concatenate(any, concatenate(word_automaton(alphabet, w.letters()), any));
  return is_empty(intersect(intersect(l, reduced_word_automaton(alphabet)), containing));
}

std::vector<CoverPair> positive_density_cover(const Automaton& l) {
  if (is_zero_density(l).zero) {
    throw std::domain_error("language has density zero; no finite cover by translates exists");
  }
  const Automaton a = reduced_part(l);
  std::vector<ReducedWord> access(static_cast<std::size_t>(a.state_count()));
  std::vector<ReducedWord> exit(static_cast<std::size_t>(a.state_count()));
  const Automaton start = with_initial(a, a.initial().front());
  for (State q = 0; q < a.state_count(); ++q) {
    Automaton to_q = start;
    for (State s = 0; s < a.state_count(); ++s) to_q.set_final(s, s == q);
    access[q] = ReducedWord::from_letters(shortest_word(to_q).value());
    exit[q] = ReducedWord::from_letters(shortest_word(with_initial(a, q)).value());
  }
  std::set<CoverPair> pairs;
  for (State q = 0; q < a.state_count(); ++q) {
    for (State r = 0; r < a.state_count(); ++r) pairs.insert({access[q].inverse(), exit[r].inverse()});
  }
  return {pairs.begin(), pairs.end()};
}

CoverCheck verify_cover(const Automaton& l, const std::vector<CoverPair>& pairs, int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  const CoverChecker checker(l, pairs);
  return checker.check(std::vector<char>(pairs.size(), 1), bound);
}

std::vector<CoverPair> minimal_cover(const Automaton& l, std::vector<CoverPair> pairs, int bound) {
  const CoverChecker checker(l, pairs);
  std::vector<char> use(pairs.size(), 1);
  if (!checker.check(use, bound).covered) {
    throw std::invalid_argument("pairs do not cover the ball of the given radius");
  }
  // Try to drop the longest translates first.
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return pairs[x].left.size() + pairs[x].right.size() > pairs[y].left.size() + pairs[y].right.size();
  });
  for (std::size_t i : order) {
    use[i] = 0;
    if (!checker.check(use, bound).covered) use[i] = 1;
  }
  std::vector<CoverPair> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (use[i] != 0) out.push_back(pairs[i]);
  }
  return out;
}

TailSummary tail_summary(const RatioSequence& seq) {
  TailSummary t;
  t.last.resize(3);
  constexpr double kTol = 1e-6;
  auto last_two = [&](std::size_t step, std::size_t residue) {
    std::vector<Rational> found;
    for (std::size_t i = seq.size(); i-- > 0 && found.size() < 2;) {
      if (i % step == residue && seq[i]) found.push_back(*seq[i]);
    }
    return found;
  };
  auto close = [&](const std::vector<Rational>& v) {
    if (v.size() < 2) return false;
    const Rational diff = v[0] - v[1];
    return std::abs(diff.get_d()) < kTol;
  };
  const auto all = last_two(1, 0);
  if (!all.empty()) t.last[0] = all.front();
  t.stabilized_mod1 = close(all);
  const auto even = last_two(2, 0);
  const auto odd = last_two(2, 1);
  if (!even.empty()) t.last[1] = even.front();
  if (!odd.empty()) t.last[2] = odd.front();
  t.stabilized_mod2 = close(even) && close(odd);
  return t;
}

DensityClassification subgroup_density(const StallingsGraph& g, int n_max) {
  const FreeAlphabet& alphabet = g.alphabet();
  const Automaton language = subgroup_language(g);
  DensityClassification c;
  c.sequences = density_sequences(language, reduced_word_automaton(alphabet), n_max);
  c.index = index(g);
  c.bipartite = is_bipartite(g);
  if (!c.index.is_finite()) {
    const ZeroDensityResult zero = is_zero_density(language);
    c.kind = DensityKind::Zero;
    c.witness = zero.witness;
    c.converges = true;
    c.sphere_sup = c.sphere_inf = c.ball_sup = c.ball_inf = c.average = c.weak = 0;
    return c;
  }
  const long m = static_cast<long>(c.index.value());
  const long k = alphabet.rank();
  c.kind = DensityKind::Positive;
  c.cover = positive_density_cover(language);
  c.period = walk_period(g);
  const Rational one_over_m(1, m);
  c.average = one_over_m;
  c.weak = one_over_m;
  if (!c.bipartite) {
    c.converges = true;
    c.sphere_sup = c.sphere_inf = c.ball_sup = c.ball_inf = one_over_m;
  } else {
    c.converges = false;
    c.sphere_sup = Rational(2, m);
    c.sphere_sup.canonicalize();
    c.sphere_inf = 0;
    c.ball_sup = Rational(2 * k - 1, m * k);
    c.ball_sup.canonicalize();
    c.ball_inf = Rational(1, m * k);
  }
  return c;
}

CoreClosureCounts cycred_closure_counts(const CountTable& core_counts, const FreeAlphabet& alphabet,
                                        int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  const auto two_k = static_cast<unsigned long>(alphabet.size());
  auto core = [&](int len) -> BigInt {
    return len <= core_counts.length_max() ? core_counts[static_cast<std::size_t>(len)] : BigInt(0);
  };
  CoreClosureCounts out;
  out.exact.counts.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  out.sum_upper_bound.counts.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  for (int n = 0; n <= n_max; ++n) {
    BigInt exact = 0;
    BigInt bound = 0;
    for (int len = n % 2; len <= n; len += 2) {
      const BigInt s = core(len);
      if (s == 0) continue;
      const auto depth = static_cast<unsigned long>((n - len) / 2);
      if (depth == 0) {
        exact += s;
      } else if (len > 0) {
        // First conjugating letter avoids both the first letter of the core and
        // the inverse of its last; later letters avoid one.
        exact += s * BigInt(two_k - 2) * power(two_k - 1, depth - 1);
      }
      if (len > 0) bound += s * power(two_k - 1, depth);
    }
    out.exact.counts[n] = exact;
    out.sum_upper_bound.counts[n] = bound;
  }
  return out;
}

ReducedWord sample_reduced(const FreeAlphabet& alphabet, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_reduced(alphabet, n, rng);
}

MonteCarloEstimate monte_carlo_density(const Automaton& l, int n, std::uint64_t trials, std::uint64_t seed,
                                       unsigned workers) {
  if (n < 0) throw std::invalid_argument("sample length must be non-negative");
  if (trials == 0) throw std::invalid_argument("at least one trial is required");
  constexpr std::uint64_t kBlock = 4096;
  const DenseDfa dfa(l.is_deterministic() ? l : determinize(l));
  const FreeAlphabet alphabet = l.alphabet();
  const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
  workers = std::max(1U, workers);

  auto run_block = [&](std::uint64_t b) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    std::mt19937_64 rng(seq);
    const std::uint64_t count = std::min(kBlock, trials - b * kBlock);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < count; ++t) {
      const ReducedWord w = sample_reduced(alphabet, n, rng);
      int s = dfa.start;
      for (Letter letter : w) s = dfa.next(s, letter.code());
      if (dfa.accepts(s)) ++hits;
    }
    return hits;
  };

  std::vector<std::uint64_t> per_worker(workers, 0);
  auto work = [&](unsigned id) {
    for (std::uint64_t b = id; b < blocks; b += workers) per_worker[id] += run_block(b);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < workers; ++id) threads.emplace_back(work, id);
    for (auto& t : threads) t.join();
  }

  MonteCarloEstimate est;
  est.trials = trials;
  for (auto h : per_worker) est.hits += h;
  est.estimate = static_cast<double>(est.hits) / static_cast<double>(trials);
  est.standard_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
  return est;
}

}  // namespace freedense
