#pragma once

// Subshifts of finite type over single-character symbols.
//
// A shift is given by an alphabet and a finite list of forbidden words. Its
// follower graph has one state per allowed word of length m-1 (m the longest
// forbidden length, at least 2) and an edge u --σ--> suffix(uσ) whenever uσ
// avoids every forbidden word. The graph is then made essential.

#include "freedense/digraph.hpp"
#include "freedense/numbers.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace freedense {

class SftSpec {
 public:
  /// Symbols must be distinct printable characters. Forbidden words must be
  /// nonempty and use only alphabet symbols. Length-1 forbidden words are
  /// removed by dropping that symbol from the alphabet.
  SftSpec(std::string alphabet, std::vector<std::string> forbidden);

  [[nodiscard]] const std::string& alphabet() const noexcept { return alphabet_; }
  /// Sorted, duplicate-free, every word of length >= 2.
  [[nodiscard]] const std::vector<std::string>& forbidden() const noexcept { return forbidden_; }
  /// Length of the state words (m - 1).
  [[nodiscard]] int window() const noexcept;

  /// True iff w uses only alphabet symbols and contains no forbidden factor.
  [[nodiscard]] bool avoids_forbidden(const std::string& w) const;

 private:
  std::string alphabet_;
  std::vector<std::string> forbidden_;
};

struct FollowerEdge {
  char symbol;
  int target;
};

class EmptyShiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double lower, double upper)
      : std::runtime_error(what), lower_(lower), upper_(upper) {}
  /// Last Collatz–Wielandt bracket on the Perron eigenvalue.
  [[nodiscard]] double lower() const noexcept { return lower_; }
  [[nodiscard]] double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

class InclusionError : public std::invalid_argument {
 public:
  InclusionError(const std::string& what, std::string witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  [[nodiscard]] const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

struct FollowerGraph {
  std::string alphabet;
  int window = 1;
  std::vector<std::string> states;
  std::vector<std::vector<FollowerEdge>> edges;

  [[nodiscard]] int state_count() const noexcept { return static_cast<int>(states.size()); }
  [[nodiscard]] std::size_t edge_count() const noexcept;
  [[nodiscard]] Adjacency adjacency() const;
  /// Every state has in- and out-degree at least one.
  [[nodiscard]] bool is_essential() const;
};

/// Throws EmptyShiftError when essentialization deletes every state.
[[nodiscard]] FollowerGraph build_follower_graph(const SftSpec& spec);

/// Strong connectivity of the essential graph. Throws std::invalid_argument on an empty graph.
[[nodiscard]] bool is_irreducible(const FollowerGraph& g);

struct EntropyOptions {
  double tolerance = 1e-12;
  std::uint64_t max_iterations = 1'000'000;
};

struct EntropyResult {
  double entropy = 0.0;  // natural log
  double perron = 0.0;   // λ
  int period = 1;
  std::uint64_t iterations = 0;
};

/// log λ by normalized power iteration on A^p, p the graph's period.
/// Requires an irreducible graph (std::invalid_argument otherwise); throws
/// NonConvergenceError after max_iterations.
[[nodiscard]] EntropyResult entropy(const FollowerGraph& g, EntropyOptions options = {});

/// Exact |Σⁿ ∩ L(X)|.
[[nodiscard]] BigInt language_count(const FollowerGraph& g, int n);
[[nodiscard]] CountTable language_counts(const FollowerGraph& g, int n_max);

/// log(|Σⁿ ∩ L(X)|) / n from exact counts.
[[nodiscard]] double entropy_slope(const FollowerGraph& g, int n);

/// w ∈ L(X).
[[nodiscard]] bool in_language(const FollowerGraph& g, const std::string& w);

/// |Σⁿ∩L(X1)| / |Σⁿ∩L(X2)| for n = 0..n_max. Inclusion L(X1) ⊆ L(X2) is checked
/// on all words up to length 8; a violation throws InclusionError with a witness.
[[nodiscard]] std::vector<Rational> nested_decay(const SftSpec& inner, const SftSpec& outer, int n_max);

/// Comma-separated forbidden list, e.g. "11,010".
[[nodiscard]] std::vector<std::string> parse_forbidden_list(const std::string& text);

}  // namespace freedense
