#include "freedense/digraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace freedense {

std::vector<int> strongly_connected_components(const Adjacency& g, int* count) {
  const int n = static_cast<int>(g.size());
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  int next_index = 0;
  int next_comp = 0;

  // Iterative Tarjan: frames of (vertex, next child position).
  std::vector<std::pair<int, std::size_t>> frames;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < g[v].size()) {
        const int w = g[v][pos++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w] != 0) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        while (true) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = next_comp;
          if (w == v) break;
        }
        ++next_comp;
      }
      const int finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  if (count != nullptr) *count = next_comp;
  return comp;
}

bool is_strongly_connected(const Adjacency& g) {
  if (g.empty()) return false;
  int count = 0;
  (void)strongly_connected_components(g, &count);
  return count == 1;
}

int digraph_period(const Adjacency& g) {
  if (g.empty()) return 0;
  std::vector<int> level(g.size(), -1);
  std::deque<int> queue{0};
  level[0] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g[v]) {
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        queue.push_back(w);
      }
    }
  }
  int period = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (level[v] < 0) continue;
    for (int w : g[v]) {
      if (level[w] < 0) continue;
      period = std::gcd(period, std::abs(level[v] + 1 - level[w]));
    }
  }
  return period;
}

}  // namespace freedense
