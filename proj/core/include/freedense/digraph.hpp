#pragma once

// Small helpers on adjacency-list digraphs shared by the Stallings-graph and
// subshift code.

#include <vector>

namespace freedense {

using Adjacency = std::vector<std::vector<int>>;

/// Strongly connected component id per vertex (Tarjan); ids are 0..count-1.
[[nodiscard]] std::vector<int> strongly_connected_components(const Adjacency& g, int* count = nullptr);

/// True iff `g` has at least one vertex and is strongly connected.
[[nodiscard]] bool is_strongly_connected(const Adjacency& g);

/// Period (gcd of cycle lengths) of a strongly connected digraph; 0 if it has no cycle.
[[nodiscard]] int digraph_period(const Adjacency& g);

}  // namespace freedense
