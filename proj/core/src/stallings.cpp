#include "freedense/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace freedense {

StallingsGraph::StallingsGraph(FreeAlphabet alphabet, int vertex_count,
                               std::vector<StallingsEdge> edges)
    : alphabet_(alphabet), vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw std::invalid_argument("a Stallings graph has at least the basepoint");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  const auto n = static_cast<std::size_t>(vertex_count_);
  const auto k = static_cast<std::size_t>(alphabet_.rank());
  out_.assign(n, std::vector<int>(k, -1));
  in_.assign(n, std::vector<int>(k, -1));
  for (const auto& e : edges_) {
    if (e.src < 0 || e.dst < 0 || e.src >= vertex_count_ || e.dst >= vertex_count_ ||
        e.generator < 0 || e.generator >= alphabet_.rank()) {
      throw std::invalid_argument("Stallings edge out of range");
    }
    // On unfolded graphs only the first edge is recorded; is_folded scans edges_.
    if (out_[e.src][e.generator] < 0) out_[e.src][e.generator] = e.dst;
    if (in_[e.dst][e.generator] < 0) in_[e.dst][e.generator] = e.src;
  }
}

std::optional<int> StallingsGraph::follow(int v, Letter l) const {
  const int t = l.sign() > 0 ? out_.at(v).at(l.generator()) : in_.at(v).at(l.generator());
  if (t < 0) return std::nullopt;
  return t;
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // The smaller index survives, so the basepoint 0 is always a root.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Removes non-basepoint vertices of degree <= 1 until none remain, then compacts.
StallingsGraph core_graph(const FreeAlphabet& alphabet, int n, std::vector<StallingsEdge> edges) {
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (const auto& e : edges) {
      ++degree[e.src];
      ++degree[e.dst];
    }
    for (int v = 1; v < n; ++v) {
      if (alive[v] != 0 && degree[v] <= 1) {
        alive[v] = 0;
        changed = true;
      }
    }
    std::erase_if(edges, [&](const StallingsEdge& e) { return alive[e.src] == 0 || alive[e.dst] == 0; });
  }
  std::vector<int> remap(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (alive[v] != 0) remap[v] = next++;
  }
  for (auto& e : edges) {
    e.src = remap[e.src];
    e.dst = remap[e.dst];
  }
  return StallingsGraph(alphabet, next, std::move(edges));
}

}  // namespace

StallingsGraph fold_from_generators(std::span<const ReducedWord> gens, const FreeAlphabet& alphabet) {
  // Wedge of loops at vertex 0.
  int n = 1;
  std::vector<StallingsEdge> edges;
  for (const ReducedWord& g : gens) {
    if (g.empty()) throw std::invalid_argument("subgroup generators must be nonempty");
    int cursor = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Letter l = g[i];
      if (l.generator() >= alphabet.rank()) throw std::invalid_argument("generator outside alphabet");
      const int next = (i + 1 == g.size()) ? 0 : n++;
      if (l.sign() > 0) {
        edges.push_back({cursor, l.generator(), next});
      } else {
        edges.push_back({next, l.generator(), cursor});
      }
      cursor = next;
    }
  }

  UnionFind uf(n);
  bool merged = true;
  while (merged) {
    merged = false;
    std::map<std::pair<int, int>, int> out;
    std::map<std::pair<int, int>, int> in;
    for (const auto& e : edges) {
      const int s = uf.find(e.src);
      const int d = uf.find(e.dst);
      auto [oit, onew] = out.emplace(std::make_pair(s, e.generator), d);
      if (!onew && uf.find(oit->second) != d) merged |= uf.unite(oit->second, d);
      auto [iit, inew] = in.emplace(std::make_pair(d, e.generator), s);
      if (!inew && uf.find(iit->second) != s) merged |= uf.unite(iit->second, s);
    }
  }

  std::set<StallingsEdge> folded;
  for (const auto& e : edges) folded.insert({uf.find(e.src), e.generator, uf.find(e.dst)});
  std::vector<int> remap(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int v = 0; v < n; ++v) {
    if (uf.find(v) == v) remap[v] = count++;
  }
  std::vector<StallingsEdge> compact;
  compact.reserve(folded.size());
  for (const auto& e : folded) compact.push_back({remap[e.src], e.generator, remap[e.dst]});
  return core_graph(alphabet, count, std::move(compact));
}

bool is_folded(const StallingsGraph& g) {
  std::set<std::pair<int, int>> out;
  std::set<std::pair<int, int>> in;
  for (const auto& e : g.edges()) {
    if (!out.emplace(e.src, e.generator).second) return false;
    if (!in.emplace(e.dst, e.generator).second) return false;
  }
  return true;
}

bool membership(const StallingsGraph& g, const ReducedWord& w) {
  int v = g.basepoint();
  for (Letter l : w) {
    if (l.generator() >= g.alphabet().rank()) return false;
    const auto next = g.follow(v, l);
    if (!next) return false;
    v = *next;
  }
  return v == g.basepoint();
}

bool is_saturated(const StallingsGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int x = 0; x < g.alphabet().rank(); ++x) {
      if (!g.follow(v, Letter(x, +1)) || !g.follow(v, Letter(x, -1))) return false;
    }
  }
  return true;
}

SubgroupIndex index(const StallingsGraph& g) {
  if (!is_saturated(g)) return SubgroupIndex::infinite();
  return SubgroupIndex::finite(static_cast<std::size_t>(g.vertex_count()));
}

bool is_bipartite(const StallingsGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges()) {
    if (e.src == e.dst) return false;
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  std::vector<int> colour(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj[v]) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

int walk_period(const StallingsGraph& g) {
  if (!is_saturated(g)) {
    throw std::invalid_argument("walk period is defined for finite-index (saturated) graphs only");
  }
  return is_bipartite(g) ? 2 : 1;
}

Adjacency non_backtracking_graph(const StallingsGraph& g) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  // Directed edge d: 2e forwards (src→dst), 2e+1 backwards (dst→src).
  auto tail = [&](int d) { return (d & 1) == 0 ? edges[d >> 1].src : edges[d >> 1].dst; };
  auto head = [&](int d) { return (d & 1) == 0 ? edges[d >> 1].dst : edges[d >> 1].src; };
  std::vector<std::vector<int>> leaving(static_cast<std::size_t>(g.vertex_count()));
  for (int d = 0; d < 2 * m; ++d) leaving[tail(d)].push_back(d);
  Adjacency adj(static_cast<std::size_t>(2 * m));
  for (int d = 0; d < 2 * m; ++d) {
    for (int next : leaving[head(d)]) {
      if (next != (d ^ 1)) adj[d].push_back(next);
    }
  }
  return adj;
}

Automaton to_automaton(const StallingsGraph& g) {
  Automaton a(g.alphabet());
  a.add_states(g.vertex_count());
  for (const auto& e : g.edges()) {
    a.add_transition(e.src, Letter(e.generator, +1), e.dst);
    a.add_transition(e.dst, Letter(e.generator, -1), e.src);
  }
  a.add_initial(g.basepoint());
  a.set_final(g.basepoint());
  return a;
}

Automaton subgroup_language(const StallingsGraph& g) {
  return minimize(intersect(to_automaton(g), reduced_word_automaton(g.alphabet())));
}

}  // namespace freedense
