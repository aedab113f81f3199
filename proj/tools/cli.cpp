#include "cli.hpp"

#include <freedense/automaton.hpp>
#include <freedense/benois.hpp>
#include <freedense/orbits.hpp>
#include <freedense/rational_expr.hpp>
#include <freedense/stallings.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace freedense::cli {

namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string word_text(const ReducedWord& w) { return w.empty() ? "1" : to_string(w); }

std::string annotate(const std::string& what, const std::string& input, std::size_t position) {
  std::string msg = what + "\n  " + input + "\n  " + std::string(std::min(position, input.size()), ' ') + "^";
  return msg;
}

// Runs a parser, turning syntax errors into InputError with a caret under the offending character.
template <class F>
auto parse_annotated(const std::string& input, F&& parse) {
  try {
    return parse();
  } catch (const WordSyntaxError& e) {
    throw InputError(annotate(e.what(), input, e.position()));
  } catch (const ExprSyntaxError& e) {
    throw InputError(annotate(e.what(), input, e.position()));
  }
}

std::vector<std::string> strings_of(const CountTable& t) {
  std::vector<std::string> v;
  for (const auto& c : t.counts) v.push_back(to_string(c));
  return v;
}

std::vector<std::optional<std::string>> strings_of(const RatioSequence& s) {
  std::vector<std::optional<std::string>> v;
  for (const auto& q : s) {
    if (q) {
      v.emplace_back(to_string(*q));
    } else {
      v.emplace_back();
    }
  }
  return v;
}

Automaton rational_language(const FreeAlphabet& alphabet, const std::string& expression) {
  const RationalExpr e = parse_annotated(expression, [&] { return parse_expr(expression, alphabet); });
  return reduced_language(compile_to_nfa(e, alphabet));
}

Automaton generated_language(const FreeAlphabet& alphabet, const std::string& generators) {
  const auto gens = parse_annotated(generators, [&] { return parse_word_list(generators, alphabet); });
  return subgroup_language(fold_from_generators(gens, alphabet));
}

Automaton input_language(const FreeAlphabet& alphabet, const std::string& generators,
                         const std::string& expression) {
  if (generators.empty() == expression.empty()) {
    throw InputError("exactly one of -g WORDLIST and -e EXPR is required");
  }
  return expression.empty() ? generated_language(alphabet, generators) : rational_language(alphabet, expression);
}

Rational last_defined(const RatioSequence& s, int n) {
  for (int i = n; i >= 0; --i) {
    if (s[static_cast<std::size_t>(i)]) return *s[static_cast<std::size_t>(i)];
  }
  return 0;
}

}  // namespace

SequenceBlock sequence_block(const DensitySequences& s) {
  SequenceBlock b;
  b.n_max = s.n_max;
  b.numerator = strings_of(s.numerator);
  b.denominator = strings_of(s.denominator);
  b.sphere_ratio = strings_of(s.sphere_ratio);
  b.ball_ratio = strings_of(s.ball_ratio);
  b.cesaro_sphere = strings_of(s.cesaro_sphere);
  b.cesaro_ball = strings_of(s.cesaro_ball);
  return b;
}

DensityReport subgroup_report(const FreeAlphabet& alphabet, const std::string& generators, int n_max) {
  const auto gens = parse_annotated(generators, [&] { return parse_word_list(generators, alphabet); });
  const StallingsGraph g = fold_from_generators(gens, alphabet);
  const DensityClassification c = subgroup_density(g, n_max);
  DensityReport r;
  r.kind = c.kind == DensityKind::Zero ? "zero" : "positive";
  if (c.witness) r.witness = word_text(*c.witness);
  if (c.kind == DensityKind::Positive) {
    r.cover.emplace();
    for (const auto& p : c.cover) r.cover->emplace_back(word_text(p.left), word_text(p.right));
  }
  if (c.index.is_finite()) r.index = static_cast<long>(c.index.value());
  r.converges = c.converges;
  r.exact_limits = true;
  r.sphere_sup = to_string(c.sphere_sup);
  r.sphere_inf = to_string(c.sphere_inf);
  r.ball_sup = to_string(c.ball_sup);
  r.ball_inf = to_string(c.ball_inf);
  r.average = to_string(c.average);
  r.weak = to_string(c.weak);
  if (c.index.is_finite()) r.period = c.period;
  r.bipartite = c.bipartite;
  r.sequences = sequence_block(c.sequences);
  return r;
}

DensityReport rational_report(const FreeAlphabet& alphabet, const std::string& expression, int n_max,
                              int cover_bound) {
  const Automaton l = rational_language(alphabet, expression);
  const DensitySequences seq = density_sequences(l, reduced_word_automaton(alphabet), n_max);
  DensityReport r;
  r.index_defined = false;
  r.sequences = sequence_block(seq);
  const ZeroDensityResult zero = is_zero_density(l);
  if (zero.zero) {
    r.kind = "zero";
    if (zero.witness) r.witness = word_text(*zero.witness);
    r.converges = true;
    r.exact_limits = true;
    r.sphere_sup = r.sphere_inf = r.ball_sup = r.ball_inf = r.average = r.weak = "0/1";
    return r;
  }
  r.kind = "positive";
  const auto pairs = positive_density_cover(l);
  r.cover.emplace();
  for (const auto& p : pairs) r.cover->emplace_back(word_text(p.left), word_text(p.right));
  r.cover_verified = verify_cover(l, pairs, cover_bound).covered;
  r.cover_bound = cover_bound;
  // No closed form for a general rational subset: report the last two terms.
  r.exact_limits = false;
  const TailSummary tail = tail_summary(seq.sphere_ratio);
  r.converges = tail.stabilized_mod1;
  const int prev = std::max(0, n_max - 1);
  const Rational s1 = last_defined(seq.sphere_ratio, n_max);
  const Rational s0 = last_defined(seq.sphere_ratio, prev);
  const Rational b1 = last_defined(seq.ball_ratio, n_max);
  const Rational b0 = last_defined(seq.ball_ratio, prev);
  r.sphere_sup = to_string(std::max(s0, s1));
  r.sphere_inf = to_string(std::min(s0, s1));
  r.ball_sup = to_string(std::max(b0, b1));
  r.ball_inf = to_string(std::min(b0, b1));
  Rational avg = (s0 + s1) / 2;
  avg.canonicalize();
  r.average = to_string(avg);
  r.weak = to_string(n_max >= 1 ? last_defined(seq.cesaro_sphere, n_max) : Rational(s1));
  return r;
}

CountReport count_report(const FreeAlphabet& alphabet, const std::string& generators,
                         const std::string& expression, int n_max) {
  const Automaton l = input_language(alphabet, generators, expression);
  CountReport r;
  r.input = expression.empty() ? generators : expression;
  r.n_max = n_max;
  r.counts = strings_of(count_words(l, n_max));
  for (int n = 0; n <= n_max; ++n) r.reduced_sphere.push_back(to_string(count_reduced_sphere(alphabet, n)));
  return r;
}

EntropyReport entropy_report(const std::string& alphabet, const std::string& forbidden,
                             std::uint64_t max_iterations) {
  const SftSpec spec(alphabet, parse_forbidden_list(forbidden));
  const FollowerGraph g = build_follower_graph(spec);
  if (!is_irreducible(g)) throw InputError("the shift is not irreducible; entropy is reported for irreducible shifts");
  EntropyOptions options;
  options.max_iterations = max_iterations;
  const EntropyResult e = entropy(g, options);
  EntropyReport r;
  r.alphabet = spec.alphabet();
  r.forbidden = spec.forbidden();
  r.states = g.state_count();
  r.edges = g.edge_count();
  r.period = e.period;
  r.entropy = round9(e.entropy);
  r.perron = round9(e.perron);
  r.iterations = e.iterations;
  return r;
}

DecayReport decay_report(const std::string& alphabet, const std::string& inner, const std::string& outer,
                         int n_max) {
  const SftSpec x1(alphabet, parse_forbidden_list(inner));
  const SftSpec x2(alphabet, parse_forbidden_list(outer));
  const auto ratios = nested_decay(x1, x2, n_max);
  DecayReport r;
  r.alphabet = alphabet;
  r.inner_forbidden = x1.forbidden();
  r.outer_forbidden = x2.forbidden();
  r.n_max = n_max;
  r.inner_counts = strings_of(language_counts(build_follower_graph(x1), n_max));
  r.outer_counts = strings_of(language_counts(build_follower_graph(x2), n_max));
  for (const auto& q : ratios) r.ratio.push_back(to_string(q));
  return r;
}

OrbitReport orbit_report(const FreeAlphabet& alphabet, const std::string& word, int bound,
                         const std::string& blocks) {
  const ReducedWord g = parse_annotated(word, [&] { return parse_reduced(word, alphabet); });
  const OrbitSet orbit = orbit_bfs(g, bound, alphabet);
  OrbitReport r;
  r.word = word_text(g);
  r.rank = alphabet.rank();
  r.bound = bound;
  r.primitive = is_primitive(g, alphabet);
  r.orbit_size = orbit.elements.size();
  r.orbit_counts = strings_of(orbit.counts_by_length());
  const CountTable closure = orbit_closure_counts(orbit, alphabet);
  r.closure_counts = strings_of(closure);
  BigInt cumulative = 0;
  for (int n = 0; n <= bound; ++n) {
    cumulative += closure[static_cast<std::size_t>(n)];
    Rational q(cumulative, count_reduced_ball(alphabet, n));
    q.canonicalize();
    r.profile.push_back(to_string(q));
  }
  if (!blocks.empty()) {
    for (const ReducedWord& s : parse_annotated(blocks, [&] { return parse_word_list(blocks, alphabet); })) {
      const bool blocking = std::none_of(orbit.elements.begin(), orbit.elements.end(),
                                         [&](const ReducedWord& e) { return contains_cyclic_factor(e, s); });
      r.blocking.push_back({word_text(s), blocking});
    }
  }
  return r;
}

MonkeyReport monkey_report(const FreeAlphabet& alphabet, const std::string& generators,
                           const std::string& expression, int length, std::uint64_t trials,
                           std::uint64_t seed) {
  const Automaton l = input_language(alphabet, generators, expression);
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  const MonteCarloEstimate mc = monte_carlo_density(l, length, trials, seed, workers);
  Rational exact(count_words(l, length)[static_cast<std::size_t>(length)], count_reduced_sphere(alphabet, length));
  exact.canonicalize();
  MonkeyReport r;
  r.input = expression.empty() ? generators : expression;
  r.length = length;
  r.seed = seed;
  r.trials = mc.trials;
  r.hits = mc.hits;
  r.estimate = round9(mc.estimate);
  r.standard_error = round9(mc.standard_error);
  r.exact = to_string(exact);
  r.exact_value = round9(exact.get_d());
  const double diff = std::abs(mc.estimate - exact.get_d());
  r.deviation = round9(mc.standard_error > 0 ? diff / mc.standard_error : (diff == 0 ? 0.0 : INFINITY));
  return r;
}

namespace {

void print_sequences(std::ostream& os, const SequenceBlock& s) {
  auto cell = [](const std::optional<std::string>& x) { return x ? *x : std::string("-"); };
  os << std::left << std::setw(4) << "n" << std::setw(16) << "count" << std::setw(16) << "reference"
     << std::setw(24) << "sphere" << "ball\n";
  for (int n = 0; n <= s.n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    os << std::setw(4) << n << std::setw(16) << s.numerator[i] << std::setw(16) << s.denominator[i] << std::setw(24)
       << cell(s.sphere_ratio[i]) << cell(s.ball_ratio[i]) << "\n";
  }
}

void print_table(std::ostream& os, const DensityReport& r) {
  os << "kind        " << r.kind << "\n";
  if (r.witness) os << "witness     " << *r.witness << "\n";
  if (r.index_defined) os << "index       " << (r.index ? std::to_string(*r.index) : "inf") << "\n";
  if (r.period) os << "period      " << *r.period << "\n";
  if (r.bipartite) os << "bipartite   " << (*r.bipartite ? "yes" : "no") << "\n";
  if (r.cover) {
    os << "cover       " << r.cover->size() << " pairs";
    if (r.cover_verified) os << (*r.cover_verified ? ", verified" : ", NOT verified") << " to length " << *r.cover_bound;
    os << "\n";
    for (const auto& [left, right] : *r.cover) os << "  " << left << " . S . " << right << "\n";
  }
  const char* note = r.exact_limits ? "" : "  (tail at n_max)";
  os << "converges   " << (r.converges ? "yes" : "no") << "\n";
  os << "sphere sup  " << r.sphere_sup << note << "\nsphere inf  " << r.sphere_inf << note << "\n";
  os << "ball sup    " << r.ball_sup << note << "\nball inf    " << r.ball_inf << note << "\n";
  os << "average     " << r.average << note << "\nweak        " << r.weak << note << "\n\n";
  print_sequences(os, r.sequences);
}

void print_table(std::ostream& os, const CountReport& r) {
  os << std::left << std::setw(4) << "n" << std::setw(24) << "count" << "reduced\n";
  for (int n = 0; n <= r.n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    os << std::setw(4) << n << std::setw(24) << r.counts[i] << r.reduced_sphere[i] << "\n";
  }
}

void print_table(std::ostream& os, const EntropyReport& r) {
  os << std::setprecision(9);
  os << "states      " << r.states << "\nedges       " << r.edges << "\nperiod      " << r.period << "\n";
  os << "perron      " << r.perron << "\nentropy     " << r.entropy << " nats\n";
}

void print_table(std::ostream& os, const DecayReport& r) {
  os << std::left << std::setw(4) << "n" << std::setw(16) << "inner" << std::setw(16) << "outer" << "ratio\n";
  for (int n = 0; n <= r.n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    os << std::setw(4) << n << std::setw(16) << r.inner_counts[i] << std::setw(16) << r.outer_counts[i]
       << r.ratio[i] << "\n";
  }
}

void print_table(std::ostream& os, const OrbitReport& r) {
  os << "word        " << r.word << "\nprimitive   " << (r.primitive ? "yes" : "no") << "\norbit size  "
     << r.orbit_size << " (cyclically reduced, length <= " << r.bound << ")\n";
  for (const auto& b : r.blocking) os << "blocks " << b.word << "  " << (b.blocking ? "yes" : "no") << "\n";
  os << "\n" << std::left << std::setw(4) << "n" << std::setw(12) << "orbit" << std::setw(16) << "conjugates"
     << "ball ratio\n";
  for (int n = 0; n <= r.bound; ++n) {
    const auto i = static_cast<std::size_t>(n);
    os << std::setw(4) << n << std::setw(12) << r.orbit_counts[i] << std::setw(16) << r.closure_counts[i]
       << r.profile[i] << "\n";
  }
}

void print_table(std::ostream& os, const MonkeyReport& r) {
  os << std::setprecision(9);
  os << "length      " << r.length << "\ntrials      " << r.trials << "\nhits        " << r.hits << "\n";
  os << "estimate    " << r.estimate << " +- " << r.standard_error << "\nexact       " << r.exact << " ("
     << r.exact_value << ")\ndeviation   " << r.deviation << " standard errors\n";
}

struct Options {
  int rank = 2;
  std::string generators;
  std::string expression;
  int n_max = 30;
  int bound = 12;
  std::uint64_t seed = 0;
  bool json = false;
  bool dump = false;
  std::string out_path;
  std::string corpus;
  std::string alphabet;
  std::string forbidden;
  std::string forbidden1;
  std::string forbidden2;
  std::string word;
  std::string block;
  std::uint64_t trials = 100000;
  std::uint64_t max_iterations = EntropyOptions{}.max_iterations;
};

void add_common(CLI::App* app, Options& o, bool with_rank = true) {
  if (with_rank) app->add_option("-k,--rank", o.rank, "rank of the free group")->check(CLI::Range(2, 26));
  app->add_option("--nmax", o.n_max, "largest word length")->check(CLI::Range(0, 100000));
  app->add_option("--bound", o.bound, "length bound")->check(CLI::Range(0, 100000));
  app->add_option("--seed", o.seed, "random seed");
  app->add_flag("--json", o.json, "emit JSON");
  app->add_option("--out", o.out_path, "write the report to PATH");
}

std::vector<std::string> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open corpus file '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  return lines;
}

// Evaluates `one` on every corpus line in parallel; results keep input order.
json run_corpus(const std::vector<std::string>& lines, const std::function<json(const std::string&)>& one) {
  const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  std::vector<json> results(lines.size());
  for (std::size_t start = 0; start < lines.size(); start += workers) {
    std::vector<std::future<json>> batch;
    const std::size_t end = std::min(lines.size(), start + workers);
    for (std::size_t i = start; i < end; ++i) {
      batch.push_back(std::async(std::launch::async, [&, i] {
        try {
          return one(lines[i]);
        } catch (const std::exception& e) {
          throw InputError("corpus line " + std::to_string(i + 1) + ": " + e.what());
        }
      }));
    }
    for (std::size_t i = start; i < end; ++i) results[i] = batch[i - start].get();
  }
  return json(results);
}

template <class Report>
void emit(std::ostream& os, const Report& r, bool as_json) {
  if (as_json) {
    os << json(r).dump(2) << "\n";
  } else {
    print_table(os, r);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and asymptotic densities of rational subsets of free groups", "freedense"};
  app.require_subcommand(1);
  Options o;

  auto* subgroup = app.add_subcommand("subgroup", "density report for a finitely generated subgroup");
  add_common(subgroup, o);
  subgroup->add_option("-g", o.generators, "comma-separated generators");
  subgroup->add_flag("--dump", o.dump, "print the minimal automaton of reduced members");
  subgroup->add_option("--corpus", o.corpus, "one generator list per line");

  auto* rational = app.add_subcommand("rational", "zero/positive classification of a rational subset");
  add_common(rational, o);
  rational->add_option("-e", o.expression, "rational expression");
  rational->add_flag("--dump", o.dump, "print the minimal automaton of reduced members");
  rational->add_option("--corpus", o.corpus, "one expression per line");

  auto* count = app.add_subcommand("count", "exact counts of reduced members by length");
  add_common(count, o);
  count->add_option("-g", o.generators, "comma-separated subgroup generators");
  count->add_option("-e", o.expression, "rational expression");
  count->add_flag("--dump", o.dump, "print the minimal automaton of reduced members");
  count->add_option("--corpus", o.corpus, "one expression per line");

  auto* sft = app.add_subcommand("sft", "subshifts of finite type");
  sft->require_subcommand(1);
  auto* sft_entropy = sft->add_subcommand("entropy", "topological entropy");
  add_common(sft_entropy, o, false);
  sft_entropy->add_option("--alphabet", o.alphabet, "symbols, e.g. 01")->required();
  sft_entropy->add_option("--forbidden", o.forbidden, "comma-separated forbidden words");
  sft_entropy->add_option("--max-iterations", o.max_iterations, "power iteration budget")
      ->check(CLI::PositiveNumber);
  auto* sft_decay = sft->add_subcommand("decay", "relative density of a nested shift");
  add_common(sft_decay, o, false);
  sft_decay->add_option("--alphabet", o.alphabet, "symbols")->required();
  sft_decay->add_option("--forbidden1", o.forbidden1, "forbidden words of the inner shift");
  sft_decay->add_option("--forbidden2", o.forbidden2, "forbidden words of the outer shift");

  auto* orbit = app.add_subcommand("orbit", "bounded automorphic orbit of a word");
  add_common(orbit, o);
  orbit->add_option("--word", o.word, "base word");
  orbit->add_option("--block", o.block, "comma-separated candidate blocking words");
  orbit->add_option("--corpus", o.corpus, "one base word per line");

  auto* monkey = app.add_subcommand("monkey", "Monte Carlo sphere density against the exact value");
  add_common(monkey, o);
  monkey->add_option("-g", o.generators, "comma-separated subgroup generators");
  monkey->add_option("-e", o.expression, "rational expression");
  monkey->add_option("--trials", o.trials, "number of samples")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "freedense: " << e.what() << "\n";
    return kInputError;
  }

  std::ostringstream buffer;
  try {
    if (orbit->parsed() && o.rank > 3) throw InputError("orbit supports rank 2 or 3");
    const FreeAlphabet alphabet(o.rank);
    const bool corpus = !o.corpus.empty();
    auto corpus_lines = [&] { return read_corpus(o.corpus); };

    if (subgroup->parsed()) {
      if (corpus) {
        buffer << run_corpus(corpus_lines(), [&](const std::string& l) {
                    return json(subgroup_report(alphabet, l, o.n_max));
                  }).dump(2)
               << "\n";
      } else if (o.dump) {
        buffer << to_text(generated_language(alphabet, o.generators));
      } else {
        emit(buffer, subgroup_report(alphabet, o.generators, o.n_max), o.json);
      }
    } else if (rational->parsed()) {
      // Cover verification enumerates every reduced word up to the bound, so a
      // smaller default than the orbit bound is used unless --bound is given.
      const int cover_bound = rational->count("--bound") > 0 ? o.bound : 6;
      if (corpus) {
        buffer << run_corpus(corpus_lines(), [&](const std::string& l) {
                    return json(rational_report(alphabet, l, o.n_max, cover_bound));
                  }).dump(2)
               << "\n";
      } else if (o.dump) {
        buffer << to_text(rational_language(alphabet, o.expression));
      } else {
        emit(buffer, rational_report(alphabet, o.expression, o.n_max, cover_bound), o.json);
      }
    } else if (count->parsed()) {
      if (corpus) {
        buffer << run_corpus(corpus_lines(), [&](const std::string& l) {
                    return json(count_report(alphabet, "", l, o.n_max));
                  }).dump(2)
               << "\n";
      } else if (o.dump) {
        buffer << to_text(input_language(alphabet, o.generators, o.expression));
      } else {
        emit(buffer, count_report(alphabet, o.generators, o.expression, o.n_max), o.json);
      }
    } else if (sft_entropy->parsed()) {
      emit(buffer, entropy_report(o.alphabet, o.forbidden, o.max_iterations), o.json);
    } else if (sft_decay->parsed()) {
      emit(buffer, decay_report(o.alphabet, o.forbidden1, o.forbidden2, o.n_max), o.json);
    } else if (orbit->parsed()) {
      if (corpus) {
        buffer << run_corpus(corpus_lines(), [&](const std::string& l) {
                    return json(orbit_report(alphabet, l, o.bound, o.block));
                  }).dump(2)
               << "\n";
      } else {
        if (o.word.empty()) throw InputError("--word is required");
        emit(buffer, orbit_report(alphabet, o.word, o.bound, o.block), o.json);
      }
    } else if (monkey->parsed()) {
      emit(buffer, monkey_report(alphabet, o.generators, o.expression, o.n_max, o.trials, o.seed), o.json);
    }
  } catch (const NonConvergenceError& e) {
    err << "freedense: " << e.what() << std::setprecision(12) << " (eigenvalue bracket [" << e.lower() << ", "
        << e.upper() << "])\n";
    return kNonConvergence;
  } catch (const InclusionError& e) {
    err << "freedense: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "freedense: " << e.what() << "\n";
    return kInputError;
  } catch (const EmptyShiftError& e) {
    err << "freedense: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "freedense: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "freedense: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "freedense: internal error: " << e.what() << "\n";
    return kFailure;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "freedense: cannot write '" << o.out_path << "'\n";
      return kInputError;
    }
    file << buffer.str();
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace freedense::cli
