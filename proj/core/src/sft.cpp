#include "freedense/sft.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace freedense {

SftSpec::SftSpec(std::string alphabet, std::vector<std::string> forbidden) {
  std::set<char> symbols;
  for (char c : alphabet) {
    if (!symbols.insert(c).second) {
      throw std::invalid_argument("duplicate symbol '" + std::string(1, c) + "' in alphabet");
    }
  }
  std::set<char> dropped;
  for (const std::string& w : forbidden) {
    if (w.empty()) throw std::invalid_argument("forbidden words must be nonempty");
    for (char c : w) {
      if (symbols.count(c) == 0) {
        throw std::invalid_argument("forbidden word '" + w + "' uses symbol '" + std::string(1, c) +
                                    "' outside the alphabet");
      }
    }
    if (w.size() == 1) dropped.insert(w.front());
  }
  for (char c : alphabet) {
    if (dropped.count(c) == 0) alphabet_.push_back(c);
  }
  std::set<std::string> kept;
  for (std::string& w : forbidden) {
    const bool uses_dropped = std::any_of(w.begin(), w.end(), [&](char c) { return dropped.count(c) != 0; });
    if (!uses_dropped) kept.insert(std::move(w));
  }
  forbidden_.assign(kept.begin(), kept.end());
}

int SftSpec::window() const noexcept {
  std::size_t m = 2;
  for (const auto& w : forbidden_) m = std::max(m, w.size());
  return static_cast<int>(m) - 1;
}

bool SftSpec::avoids_forbidden(const std::string& w) const {
  for (char c : w) {
    if (alphabet_.find(c) == std::string::npos) return false;
  }
  return std::none_of(forbidden_.begin(), forbidden_.end(),
                      [&](const std::string& f) { return w.find(f) != std::string::npos; });
}

std::size_t FollowerGraph::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& v : edges) n += v.size();
  return n;
}

Adjacency FollowerGraph::adjacency() const {
  Adjacency adj(edges.size());
  for (std::size_t s = 0; s < edges.size(); ++s) {
    for (const auto& e : edges[s]) adj[s].push_back(e.target);
  }
  return adj;
}

bool FollowerGraph::is_essential() const {
  std::vector<int> in(states.size(), 0);
  for (const auto& v : edges) {
    for (const auto& e : v) ++in[e.target];
  }
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (edges[s].empty() || in[s] == 0) return false;
  }
  return true;
}

FollowerGraph build_follower_graph(const SftSpec& spec) {
  const int window = spec.window();
  const std::string& alphabet = spec.alphabet();
  constexpr double kMaxStates = 1 << 22;
  if (std::pow(static_cast<double>(alphabet.size()), window) > kMaxStates) {
    throw std::invalid_argument("follower graph too large for the given forbidden lengths");
  }

  // All allowed words of length `window`, in lexicographic symbol order.
  std::vector<std::string> words{""};
  for (int i = 0; i < window; ++i) {
    std::vector<std::string> next;
    for (const auto& w : words) {
      for (char c : alphabet) {
        std::string x = w + c;
        if (spec.avoids_forbidden(x)) next.push_back(std::move(x));
      }
    }
    words = std::move(next);
  }
  std::map<std::string, int> id;
  for (std::size_t i = 0; i < words.size(); ++i) id.emplace(words[i], static_cast<int>(i));
  std::vector<std::vector<FollowerEdge>> edges(words.size());
  for (std::size_t s = 0; s < words.size(); ++s) {
    for (char c : alphabet) {
      const std::string extended = words[s] + c;
      if (!spec.avoids_forbidden(extended)) continue;
      const auto it = id.find(extended.substr(1));
      if (it != id.end()) edges[s].push_back({c, it->second});
    }
  }

  // Essentialize: drop states without predecessors or successors until stable.
  std::vector<char> alive(words.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> in(words.size(), 0);
    std::vector<int> out(words.size(), 0);
    for (std::size_t s = 0; s < words.size(); ++s) {
      if (alive[s] == 0) continue;
      for (const auto& e : edges[s]) {
        if (alive[e.target] == 0) continue;
        ++out[s];
        ++in[e.target];
      }
    }
    for (std::size_t s = 0; s < words.size(); ++s) {
      if (alive[s] != 0 && (in[s] == 0 || out[s] == 0)) {
        alive[s] = 0;
        changed = true;
      }
    }
  }

  FollowerGraph g;
  g.alphabet = alphabet;
  g.window = window;
  std::vector<int> remap(words.size(), -1);
  for (std::size_t s = 0; s < words.size(); ++s) {
    if (alive[s] != 0) {
      remap[s] = static_cast<int>(g.states.size());
      g.states.push_back(words[s]);
    }
  }
  if (g.states.empty()) throw EmptyShiftError("the subshift is empty: every state was removed");
  g.edges.resize(g.states.size());
  for (std::size_t s = 0; s < words.size(); ++s) {
    if (remap[s] < 0) continue;
    for (const auto& e : edges[s]) {
      if (remap[e.target] >= 0) g.edges[remap[s]].push_back({e.symbol, remap[e.target]});
    }
  }
  return g;
}

bool is_irreducible(const FollowerGraph& g) {
  if (g.states.empty()) throw std::invalid_argument("irreducibility of an empty graph is undefined");
  return is_strongly_connected(g.adjacency());
}

EntropyResult entropy(const FollowerGraph& g, EntropyOptions options) {
  if (!is_irreducible(g)) {
    throw std::invalid_argument("entropy requires an irreducible shift (follower graph not strongly connected)");
  }
  const Adjacency adj = g.adjacency();
  const int period = std::max(1, digraph_period(adj));
  const std::size_t n = adj.size();

  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> y(n);
  std::vector<double> tmp(n);
  auto multiply = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (std::size_t u = 0; u < n; ++u) {
      double s = 0.0;
      for (int v : adj[u]) s += in[v];
      out[u] = s;
    }
  };

  EntropyResult result;
  result.period = period;
  double previous = -1.0;
  double lower = 0.0;
  double upper = 0.0;
  for (std::uint64_t it = 1; it <= options.max_iterations; ++it) {
    tmp = x;
    for (int p = 0; p < period; ++p) {
      multiply(tmp, y);
      tmp = y;
    }
    double norm = 0.0;
    lower = std::numeric_limits<double>::infinity();
    upper = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      norm += y[u];
      if (x[u] > 0.0) {
        lower = std::min(lower, y[u] / x[u]);
        upper = std::max(upper, y[u] / x[u]);
      }
    }
    // x has unit 1-norm, so ‖A^p x‖₁ estimates λ^p.
    const double lambda = std::pow(norm, 1.0 / period);
    for (std::size_t u = 0; u < n; ++u) x[u] = y[u] / norm;
    if (std::abs(lambda - previous) < options.tolerance) {
      result.perron = lambda;
      result.entropy = std::log(lambda);
      result.iterations = it;
      return result;
    }
    previous = lambda;
  }
  throw NonConvergenceError("power iteration did not converge", std::pow(lower, 1.0 / period),
                            std::pow(upper, 1.0 / period));
}

CountTable language_counts(const FollowerGraph& g, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  CountTable table;
  table.counts.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  for (int len = 0; len <= std::min(n_max, g.window - 1); ++len) {
    std::set<std::string> prefixes;
    for (const auto& s : g.states) prefixes.insert(s.substr(0, static_cast<std::size_t>(len)));
    table.counts[len] = static_cast<unsigned long>(prefixes.size());
  }
  if (n_max < g.window) return table;
  // Words of length window + t correspond to paths with t edges.
  std::vector<BigInt> paths(g.states.size(), BigInt(1));
  std::vector<BigInt> next(g.states.size());
  for (int len = g.window; len <= n_max; ++len) {
    if (len > g.window) {
      // paths[s] = number of t-edge paths starting at s.
      for (std::size_t s = 0; s < g.states.size(); ++s) {
        next[s] = 0;
        for (const auto& e : g.edges[s]) next[s] += paths[e.target];
      }
      std::swap(paths, next);
    }
    BigInt total = 0;
    for (const auto& p : paths) total += p;
    table.counts[len] = total;
  }
  return table;
}

BigInt language_count(const FollowerGraph& g, int n) {
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  return language_counts(g, n)[static_cast<std::size_t>(n)];
}

double entropy_slope(const FollowerGraph& g, int n) {
  if (n < 1) throw std::invalid_argument("slope needs n >= 1");
  const BigInt c = language_count(g, n);
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, c.get_mpz_t());
  return (std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0)) / n;
}

bool in_language(const FollowerGraph& g, const std::string& w) {
  for (char c : w) {
    if (g.alphabet.find(c) == std::string::npos) return false;
  }
  const auto window = static_cast<std::size_t>(g.window);
  if (w.size() < window) {
    return std::any_of(g.states.begin(), g.states.end(),
                       [&](const std::string& s) { return s.compare(0, w.size(), w) == 0; });
  }
  const auto it = std::find(g.states.begin(), g.states.end(), w.substr(0, window));
  if (it == g.states.end()) return false;
  int s = static_cast<int>(it - g.states.begin());
  for (std::size_t i = window; i < w.size(); ++i) {
    const auto& out = g.edges[s];
    const auto e = std::find_if(out.begin(), out.end(), [&](const FollowerEdge& x) { return x.symbol == w[i]; });
    if (e == out.end()) return false;
    s = e->target;
  }
  return true;
}

std::vector<Rational> nested_decay(const SftSpec& inner, const SftSpec& outer, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  const FollowerGraph g1 = build_follower_graph(inner);
  const FollowerGraph g2 = build_follower_graph(outer);

  // Level by level, so the reported witness is the shortlex-least one.
  constexpr std::size_t kInclusionDepth = 8;
  std::vector<std::string> level{""};
  for (std::size_t depth = 0; !level.empty(); ++depth) {
    for (const auto& w : level) {
      if (!in_language(g2, w)) {
        throw InclusionError("inner shift is not contained in the outer shift: '" + w +
                                 "' occurs only in the inner one",
                             w);
      }
    }
    if (depth == kInclusionDepth) break;
    std::vector<std::string> next;
    for (const auto& w : level) {
      for (char c : g1.alphabet) {
        std::string x = w + c;
        if (in_language(g1, x)) next.push_back(std::move(x));
      }
    }
    level = std::move(next);
  }

  const CountTable c1 = language_counts(g1, n_max);
  const CountTable c2 = language_counts(g2, n_max);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    Rational q(c1[static_cast<std::size_t>(n)], c2[static_cast<std::size_t>(n)]);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

std::vector<std::string> parse_forbidden_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace freedense
