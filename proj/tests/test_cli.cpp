#include "cli.hpp"

#include <freedense/automaton.hpp>
#include <freedense/stallings.hpp>

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace freedense;
using namespace freedense::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path golden(const std::string& name) { return std::filesystem::path(FREEDENSE_GOLDEN_DIR) / name; }

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("freedense_test_cli_" + name);
}

// Parses the JSON into the report type and back; both directions must be lossless.
template <class Report>
Report round_trip(const std::string& text) {
  const json j = json::parse(text);
  const auto r = j.get<Report>();
  CHECK(json(r) == j);
  CHECK(json(r).get<Report>() == r);
  CHECK(json(r).dump(2) + "\n" == text);
  return r;
}

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
};

const std::vector<GoldenCase> kGolden{
    {"subgroup_even.json", {"subgroup", "-k", "2", "-g", "aa,ab,aB", "--nmax", "8", "--json"}},
    {"subgroup_a2b.json", {"subgroup", "-k", "2", "-g", "aa,b", "--nmax", "6", "--json"}},
    {"rational_all.json", {"rational", "-k", "2", "-e", "(a|A|b|B)*", "--nmax", "6", "--json"}},
    {"rational_astar.json", {"rational", "-k", "2", "-e", "a*", "--nmax", "6", "--json"}},
    {"count_expr.json", {"count", "-k", "2", "-e", "(ab|B)*a", "--nmax", "8", "--json"}},
    {"sft_entropy.json", {"sft", "entropy", "--alphabet", "01", "--forbidden", "11", "--json"}},
    {"sft_decay.json",
     {"sft", "decay", "--alphabet", "aAbB", "--forbidden1", "aA,Aa,bB,Bb,ab", "--forbidden2", "aA,Aa,bB,Bb",
      "--nmax", "10", "--json"}},
    {"orbit_ab.json", {"orbit", "--rank", "2", "--word", "ab", "--bound", "6", "--block", "aabb,a", "--json"}},
    {"monkey_odd.json",
     {"monkey", "-k", "2", "-g", "aa,b,abA", "--nmax", "10", "--trials", "5000", "--seed", "7", "--json"}},
};

}  // namespace

TEST_CASE("golden reports are reproduced byte for byte") {
  for (const auto& g : kGolden) {
    CAPTURE(g.file);
    const auto o = call(g.args);
    REQUIRE(o.code == kOk);
    CHECK(o.out == slurp(golden(g.file)));
  }
}

TEST_CASE("reports round-trip through JSON") {
  const auto even = round_trip<DensityReport>(slurp(golden("subgroup_even.json")));
  CHECK(even.index == 2);
  CHECK(even.ball_sup == "3/4");
  CHECK(even.ball_inf == "1/4");
  CHECK(even.average == "1/2");
  CHECK(even.weak == "1/2");
  CHECK(even.period == 2);
  CHECK(even.bipartite == true);
  CHECK(json::parse(slurp(golden("subgroup_even.json")))["index"] == 2);

  const auto a2b = round_trip<DensityReport>(slurp(golden("subgroup_a2b.json")));
  CHECK(a2b.kind == "zero");
  CHECK(a2b.witness.has_value());
  CHECK(json::parse(slurp(golden("subgroup_a2b.json")))["index"] == "inf");

  const auto all = round_trip<DensityReport>(slurp(golden("rational_all.json")));
  CHECK(all.kind == "positive");
  CHECK(all.cover_verified == true);
  CHECK(json::parse(slurp(golden("rational_all.json")))["index"].is_null());

  const auto astar = round_trip<DensityReport>(slurp(golden("rational_astar.json")));
  CHECK(astar.kind == "zero");
  CHECK(astar.witness == "A");

  const auto count = round_trip<CountReport>(slurp(golden("count_expr.json")));
  CHECK(count.counts.size() == 9);
  CHECK(count.reduced_sphere[3] == "36");

  const auto ent = round_trip<EntropyReport>(slurp(golden("sft_entropy.json")));
  CHECK(std::abs(ent.entropy - 0.4812118) < 1e-7);
  CHECK(ent.states == 2);
  CHECK(ent.edges == 3);

  const auto decay = round_trip<DecayReport>(slurp(golden("sft_decay.json")));
  CHECK(decay.ratio.front() == "1/1");

  const auto orbit = round_trip<OrbitReport>(slurp(golden("orbit_ab.json")));
  CHECK(orbit.primitive);
  REQUIRE(orbit.blocking.size() == 2);
  CHECK(orbit.blocking[0].blocking);
  CHECK_FALSE(orbit.blocking[1].blocking);

  const auto monkey = round_trip<MonkeyReport>(slurp(golden("monkey_odd.json")));
  CHECK(monkey.hits <= monkey.trials);
  CHECK(monkey.deviation <= 4.0);
}

TEST_CASE("report structs round-trip") {
  DensityReport r;
  r.kind = "positive";
  r.cover = std::vector<std::pair<std::string, std::string>>{{"1", "a"}};
  r.index = std::nullopt;
  r.sphere_sup = r.sphere_inf = r.ball_sup = r.ball_inf = r.average = r.weak = "1/3";
  r.sequences.n_max = 1;
  r.sequences.numerator = {"1", "0"};
  r.sequences.denominator = {"1", "4"};
  r.sequences.sphere_ratio = {std::string("1/1"), std::nullopt};
  r.sequences.ball_ratio = r.sequences.sphere_ratio;
  r.sequences.cesaro_sphere = r.sequences.sphere_ratio;
  r.sequences.cesaro_ball = r.sequences.sphere_ratio;
  CHECK(json(r)["index"] == "inf");
  CHECK(json(r).get<DensityReport>() == r);
  r.index_defined = false;
  CHECK(json(r)["index"].is_null());
  CHECK(json(r).get<DensityReport>() == r);
}

TEST_CASE("fixed seed gives byte-identical Monte Carlo output") {
  const std::vector<std::string> args{"monkey", "-g", "aa,b,abA", "--nmax", "12", "--trials", "20000", "--seed", "99"};
  const auto a = call(args);
  const auto b = call(args);
  REQUIRE(a.code == kOk);
  CHECK(a.out == b.out);
  auto other = args;
  other.back() = "100";
  CHECK(call(other).out != a.out);
}

TEST_CASE("exit codes by error class") {
  // Usage errors.
  CHECK(call({}).code == kInputError);
  CHECK(call({"subgroup", "--frobnicate"}).code == kInputError);
  CHECK(call({"subgroup", "-k", "1", "-g", "a"}).code == kInputError);
  CHECK(call({"subgroup", "-k", "27", "-g", "a"}).code == kInputError);
  CHECK(call({"subgroup", "--nmax", "many"}).code == kInputError);
  CHECK(call({"orbit", "-k", "4", "--word", "a"}).code == kInputError);
  CHECK(call({"orbit"}).code == kInputError);
  CHECK(call({"count"}).code == kInputError);
  CHECK(call({"count", "-g", "a", "-e", "a"}).code == kInputError);
  CHECK(call({"sft", "entropy"}).code == kInputError);

  // Malformed words and expressions carry a caret under the position.
  const auto word = call({"subgroup", "-g", "ab,a(b"});
  CHECK(word.code == kInputError);
  CHECK(word.err.find("ab,a(b\n      ^") != std::string::npos);
  const auto expr = call({"rational", "-e", "a(b"});
  CHECK(expr.code == kInputError);
  CHECK(expr.err.find("position 3") != std::string::npos);
  CHECK(call({"subgroup", "-k", "2", "-g", "ac"}).code == kInputError);
  CHECK(call({"orbit", "--word", "aabb", "--bound", "3"}).code == kInputError);

  // Ill-posed shifts.
  CHECK(call({"sft", "entropy", "--alphabet", "01", "--forbidden", "00,01,10,11"}).code == kInputError);
  CHECK(call({"sft", "entropy", "--alphabet", "0123", "--forbidden", "02,03,12,13,20,21,30,31"}).code == kInputError);
  CHECK(call({"sft", "decay", "--alphabet", "aAbB", "--forbidden1", "aA,Aa,bB,Bb", "--forbidden2", "aA,Aa,bB,Bb,ab",
              "--nmax", "5"})
            .code == kInputError);

  // Non-convergence reports the bracket.
  const auto nc = call({"sft", "entropy", "--alphabet", "01", "--forbidden", "11", "--max-iterations", "3"});
  CHECK(nc.code == kNonConvergence);
  CHECK(nc.err.find("bracket") != std::string::npos);

  CHECK(call({"--help"}).code == kOk);
}

TEST_CASE("empty generator list is the trivial subgroup") {
  const auto o = call({"subgroup", "-g", "", "--nmax", "4", "--json"});
  REQUIRE(o.code == kOk);
  const auto r = json::parse(o.out).get<DensityReport>();
  CHECK(r.kind == "zero");
  CHECK(r.sequences.numerator == std::vector<std::string>{"1", "0", "0", "0", "0"});
}

TEST_CASE("tables are printed without --json") {
  for (const auto& g : kGolden) {
    auto args = g.args;
    args.pop_back();
    const auto o = call(args);
    CHECK(o.code == kOk);
    CHECK_FALSE(o.out.empty());
    CHECK(o.out.front() != '{');
  }
}

TEST_CASE("--out writes the report to a file") {
  const auto path = scratch("out.json");
  const auto o = call({"sft", "entropy", "--alphabet", "01", "--forbidden", "11", "--json", "--out", path.string()});
  CHECK(o.code == kOk);
  CHECK(o.out.empty());
  CHECK(slurp(path) == slurp(golden("sft_entropy.json")));
  std::filesystem::remove(path);
}

TEST_CASE("--dump prints a reloadable minimal automaton") {
  const auto o = call({"subgroup", "-g", "aa,ab,aB", "--dump"});
  REQUIRE(o.code == kOk);
  const FreeAlphabet f2(2);
  const auto back = from_text(o.out, f2);
  CHECK(equivalent(back, subgroup_language(fold_from_generators(parse_word_list("aa,ab,aB", f2), f2))));
}

TEST_CASE("corpus output keeps input order") {
  const auto path = scratch("corpus.txt");
  const std::vector<std::string> lines{"aa,ab,aB", "aa,b", "a,b", "aa,b,abA", "ab", "aaa,b", "aB,ba", "abab,b"};
  {
    std::ofstream f(path);
    f << "# one generator list per line\n\n";
    for (const auto& l : lines) f << l << "\n";
  }
  const auto o = call({"subgroup", "--corpus", path.string(), "--nmax", "6"});
  REQUIRE(o.code == kOk);
  const json arr = json::parse(o.out);
  REQUIRE(arr.size() == lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    CAPTURE(lines[i]);
    CHECK(arr[i] == json::parse(call({"subgroup", "-g", lines[i], "--nmax", "6", "--json"}).out));
  }

  {
    std::ofstream f(path);
    f << "a\nab\naabb\n";
  }
  const auto orbits = json::parse(call({"orbit", "--corpus", path.string(), "--bound", "5"}).out);
  REQUIRE(orbits.size() == 3);
  CHECK(orbits[0]["word"] == "a");
  CHECK(orbits[2]["word"] == "aabb");
  CHECK(orbits[2]["primitive"] == false);

  {
    std::ofstream f(path);
    f << "ab\na(b\n";
  }
  const auto bad = call({"rational", "--corpus", path.string()});
  CHECK(bad.code == kInputError);
  CHECK(bad.err.find("corpus line 2") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(call({"rational", "--corpus", path.string()}).code == kInputError);
}
