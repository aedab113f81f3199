#include "report.hpp"

#include <cstdio>
#include <cstdlib>

namespace freedense::cli {

double round9(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

namespace {

using nlohmann::json;

json optional_strings(const std::vector<std::optional<std::string>>& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x) {
      a.push_back(*x);
    } else {
      a.push_back(nullptr);
    }
  }
  return a;
}

std::vector<std::optional<std::string>> read_optional_strings(const json& a) {
  std::vector<std::optional<std::string>> v;
  for (const auto& x : a) {
    if (x.is_null()) {
      v.emplace_back();
    } else {
      v.emplace_back(x.get<std::string>());
    }
  }
  return v;
}

}  // namespace

void to_json(json& j, const SequenceBlock& r) {
  j = json{{"n_max", r.n_max},
           {"numerator", r.numerator},
           {"denominator", r.denominator},
           {"sphere_ratio", optional_strings(r.sphere_ratio)},
           {"ball_ratio", optional_strings(r.ball_ratio)},
           {"cesaro_sphere", optional_strings(r.cesaro_sphere)},
           {"cesaro_ball", optional_strings(r.cesaro_ball)}};
}

void from_json(const json& j, SequenceBlock& r) {
  j.at("n_max").get_to(r.n_max);
  j.at("numerator").get_to(r.numerator);
  j.at("denominator").get_to(r.denominator);
  r.sphere_ratio = read_optional_strings(j.at("sphere_ratio"));
  r.ball_ratio = read_optional_strings(j.at("ball_ratio"));
  r.cesaro_sphere = read_optional_strings(j.at("cesaro_sphere"));
  r.cesaro_ball = read_optional_strings(j.at("cesaro_ball"));
}

void to_json(json& j, const DensityReport& r) {
  j = json::object();
  j["kind"] = r.kind;
  if (r.witness) j["witness"] = *r.witness;
  if (r.cover) {
    json pairs = json::array();
    for (const auto& [left, right] : *r.cover) pairs.push_back(json::array({left, right}));
    j["cover"] = pairs;
  }
  if (r.cover_verified) j["cover_verified"] = *r.cover_verified;
  if (r.cover_bound) j["cover_bound"] = *r.cover_bound;
  if (!r.index_defined) {
    j["index"] = nullptr;
  } else if (r.index) {
    j["index"] = *r.index;
  } else {
    j["index"] = "inf";
  }
  j["converges"] = r.converges;
  j["exact_limits"] = r.exact_limits;
  j["sphere_sup"] = r.sphere_sup;
  j["sphere_inf"] = r.sphere_inf;
  j["ball_sup"] = r.ball_sup;
  j["ball_inf"] = r.ball_inf;
  j["average"] = r.average;
  j["weak"] = r.weak;
  if (r.period) j["period"] = *r.period;
  if (r.bipartite) j["bipartite"] = *r.bipartite;
  j["sequences"] = r.sequences;
}

void from_json(const json& j, DensityReport& r) {
  r = DensityReport{};
  j.at("kind").get_to(r.kind);
  if (j.contains("witness")) r.witness = j["witness"].get<std::string>();
  if (j.contains("cover")) {
    r.cover.emplace();
    for (const auto& p : j["cover"]) r.cover->emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  }
  if (j.contains("cover_verified")) r.cover_verified = j["cover_verified"].get<bool>();
  if (j.contains("cover_bound")) r.cover_bound = j["cover_bound"].get<int>();
  const json& index = j.at("index");
  if (index.is_null()) {
    r.index_defined = false;
  } else if (index.is_string()) {
    if (index.get<std::string>() != "inf") throw std::invalid_argument("index must be an integer or \"inf\"");
  } else {
    r.index = index.get<long>();
  }
  j.at("converges").get_to(r.converges);
  j.at("exact_limits").get_to(r.exact_limits);
  j.at("sphere_sup").get_to(r.sphere_sup);
  j.at("sphere_inf").get_to(r.sphere_inf);
  j.at("ball_sup").get_to(r.ball_sup);
  j.at("ball_inf").get_to(r.ball_inf);
  j.at("average").get_to(r.average);
  j.at("weak").get_to(r.weak);
  if (j.contains("period")) r.period = j["period"].get<int>();
  if (j.contains("bipartite")) r.bipartite = j["bipartite"].get<bool>();
  j.at("sequences").get_to(r.sequences);
}

}  // namespace freedense::cli
