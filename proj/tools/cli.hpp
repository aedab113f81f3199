#pragma once

#include "report.hpp"

#include <freedense/density.hpp>
#include <freedense/sft.hpp>
#include <freedense/words.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace freedense::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kInputError = 2, kNonConvergence = 3 };

/// Parses argv, runs one subcommand and writes its report to `out` (or the
/// --out path). Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

SequenceBlock sequence_block(const DensitySequences& s);

DensityReport subgroup_report(const FreeAlphabet& alphabet, const std::string& generators, int n_max);
DensityReport rational_report(const FreeAlphabet& alphabet, const std::string& expression, int n_max,
                              int cover_bound);
/// Exactly one of `generators` and `expression` is nonempty.
CountReport count_report(const FreeAlphabet& alphabet, const std::string& generators,
                         const std::string& expression, int n_max);
EntropyReport entropy_report(const std::string& alphabet, const std::string& forbidden,
                             std::uint64_t max_iterations = EntropyOptions{}.max_iterations);
DecayReport decay_report(const std::string& alphabet, const std::string& inner, const std::string& outer,
                         int n_max);
OrbitReport orbit_report(const FreeAlphabet& alphabet, const std::string& word, int bound,
                         const std::string& blocks);
MonkeyReport monkey_report(const FreeAlphabet& alphabet, const std::string& generators,
                           const std::string& expression, int length, std::uint64_t trials,
                           std::uint64_t seed);

}  // namespace freedense::cli
