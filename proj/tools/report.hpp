#pragma once

// Report records emitted by the command-line tool, with JSON conversions.
// Rationals are stored as "p/q" strings and big counts as decimal strings, so
// a report read back from its own JSON compares equal to the original.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freedense::cli {

/// Rounds to 9 significant digits; the JSON writer then prints at most 9.
double round9(double x);

struct SequenceBlock {
  int n_max = 0;
  std::vector<std::string> numerator;
  std::vector<std::string> denominator;
  std::vector<std::optional<std::string>> sphere_ratio;
  std::vector<std::optional<std::string>> ball_ratio;
  std::vector<std::optional<std::string>> cesaro_sphere;
  std::vector<std::optional<std::string>> cesaro_ball;

  bool operator==(const SequenceBlock&) const = default;
};

struct DensityReport {
  std::string kind;  // "zero" | "positive"
  std::optional<std::string> witness;
  std::optional<std::vector<std::pair<std::string, std::string>>> cover;
  std::optional<bool> cover_verified;
  std::optional<int> cover_bound;
  /// Finite index value; nullopt with index_defined means "inf".
  std::optional<long> index;
  bool index_defined = true;
  bool converges = true;
  /// False when the sup/inf/average fields are read off the tail at n_max
  /// rather than given in closed form.
  bool exact_limits = true;
  std::string sphere_sup;
  std::string sphere_inf;
  std::string ball_sup;
  std::string ball_inf;
  std::string average;
  std::string weak;
  std::optional<int> period;
  std::optional<bool> bipartite;
  SequenceBlock sequences;

  bool operator==(const DensityReport&) const = default;
};

struct CountReport {
  std::string input;
  int n_max = 0;
  std::vector<std::string> counts;
  std::vector<std::string> reduced_sphere;

  bool operator==(const CountReport&) const = default;
};

struct EntropyReport {
  std::string alphabet;
  std::vector<std::string> forbidden;
  int states = 0;
  std::uint64_t edges = 0;
  int period = 1;
  double entropy = 0.0;
  double perron = 0.0;
  std::uint64_t iterations = 0;

  bool operator==(const EntropyReport&) const = default;
};

struct DecayReport {
  std::string alphabet;
  std::vector<std::string> inner_forbidden;
  std::vector<std::string> outer_forbidden;
  int n_max = 0;
  std::vector<std::string> inner_counts;
  std::vector<std::string> outer_counts;
  std::vector<std::string> ratio;

  bool operator==(const DecayReport&) const = default;
};

struct BlockVerdict {
  std::string word;
  bool blocking = false;

  bool operator==(const BlockVerdict&) const = default;
};

struct OrbitReport {
  std::string word;
  int rank = 2;
  int bound = 0;
  bool primitive = false;
  std::uint64_t orbit_size = 0;
  std::vector<std::string> orbit_counts;
  std::vector<std::string> closure_counts;
  std::vector<std::string> profile;
  std::vector<BlockVerdict> blocking;

  bool operator==(const OrbitReport&) const = default;
};

struct MonkeyReport {
  std::string input;
  int length = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;
  double standard_error = 0.0;
  std::string exact;
  double exact_value = 0.0;
  double deviation = 0.0;  // |estimate - exact| in standard errors

  bool operator==(const MonkeyReport&) const = default;
};

void to_json(nlohmann::json& j, const SequenceBlock& r);
void from_json(const nlohmann::json& j, SequenceBlock& r);
void to_json(nlohmann::json& j, const DensityReport& r);
void from_json(const nlohmann::json& j, DensityReport& r);

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CountReport, input, n_max, counts, reduced_sphere)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EntropyReport, alphabet, forbidden, states, edges, period, entropy, perron,
                                   iterations)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DecayReport, alphabet, inner_forbidden, outer_forbidden, n_max, inner_counts,
                                   outer_counts, ratio)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BlockVerdict, word, blocking)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OrbitReport, word, rank, bound, primitive, orbit_size, orbit_counts,
                                   closure_counts, profile, blocking)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MonkeyReport, input, length, seed, trials, hits, estimate, standard_error,
                                   exact, exact_value, deviation)

}  // namespace freedense::cli
