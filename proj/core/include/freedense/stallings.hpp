#pragma once

// Stallings graphs of finitely generated subgroups of F(X).
//
// A Stallings graph is a based, folded, X-labelled graph. Reading a reduced
// word from the basepoint (inverse letters traverse edges backwards) returns
// to the basepoint exactly when the word lies in the subgroup.

#include "freedense/automaton.hpp"
#include "freedense/digraph.hpp"
#include "freedense/words.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace freedense {

struct StallingsEdge {
  int src;
  int generator;
  int dst;

  auto operator<=>(const StallingsEdge&) const = default;
};

/// [F(X) : H], possibly infinite.
class SubgroupIndex {
 public:
  static SubgroupIndex finite(std::size_t m) { return SubgroupIndex(m); }
  static SubgroupIndex infinite() { return SubgroupIndex(std::nullopt); }

  [[nodiscard]] bool is_finite() const noexcept { return value_.has_value(); }
  /// Throws std::bad_optional_access for infinite index.
  [[nodiscard]] std::size_t value() const { return value_.value(); }
  [[nodiscard]] std::string to_string() const {
    return value_ ? std::to_string(*value_) : std::string("inf");
  }

  bool operator==(const SubgroupIndex&) const = default;

 private:
  explicit SubgroupIndex(std::optional<std::size_t> v) : value_(v) {}
  std::optional<std::size_t> value_;
};

class StallingsGraph {
 public:
  StallingsGraph(FreeAlphabet alphabet, int vertex_count, std::vector<StallingsEdge> edges);

  [[nodiscard]] const FreeAlphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] int vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] int basepoint() const noexcept { return 0; }
  /// Sorted, duplicate-free.
  [[nodiscard]] const std::vector<StallingsEdge>& edges() const noexcept { return edges_; }

  /// Endpoint of the edge read by `l` from `v`, if any (folded graphs only).
  [[nodiscard]] std::optional<int> follow(int v, Letter l) const;

 private:
  FreeAlphabet alphabet_;
  int vertex_count_;
  std::vector<StallingsEdge> edges_;
  // out_[v][g], in_[v][g]: -1 when absent. Built from edges_.
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// Folds the wedge of generator loops and cores it (the basepoint is kept even
/// at degree one). Generators must be nonempty reduced words; an empty list
/// gives the one-vertex graph of the trivial subgroup.
[[nodiscard]] StallingsGraph fold_from_generators(std::span<const ReducedWord> gens,
                                                  const FreeAlphabet& alphabet);

/// No vertex has two outgoing, or two incoming, edges with the same label.
[[nodiscard]] bool is_folded(const StallingsGraph& g);

[[nodiscard]] bool membership(const StallingsGraph& g, const ReducedWord& w);

/// Every vertex has an outgoing and an incoming edge for every generator.
[[nodiscard]] bool is_saturated(const StallingsGraph& g);

/// vertex_count when saturated, infinite otherwise.
[[nodiscard]] SubgroupIndex index(const StallingsGraph& g);

/// Two-colourable as an undirected multigraph; any loop is an odd cycle.
[[nodiscard]] bool is_bipartite(const StallingsGraph& g);

/// Period of the non-backtracking walk: 1 if not bipartite, 2 otherwise.
/// Throws std::invalid_argument for infinite-index (unsaturated) graphs.
[[nodiscard]] int walk_period(const StallingsGraph& g);

/// Directed-edge graph of the non-backtracking walk. Vertex 2e is edge e read
/// forwards, 2e+1 backwards; d → d' iff d' leaves where d ends and d' is not the
/// reversal of d.
[[nodiscard]] Adjacency non_backtracking_graph(const StallingsGraph& g);

/// The graph as a DFA with the basepoint initial and final. Accepts also
/// unreduced words that trace closed paths.
[[nodiscard]] Automaton to_automaton(const StallingsGraph& g);

/// Minimal DFA of the reduced words of H.
[[nodiscard]] Automaton subgroup_language(const StallingsGraph& g);

}  // namespace freedense
