#include "necklace/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace necklace {

namespace {

// nlohmann::ordered_json keeps keys in insertion order, which the formats fix.
using Json = nlohmann::ordered_json;

Json pairs_json(const Matching& m) {
  Matching sorted = m;
  canonicalize(sorted);
  Json arr = Json::array();
  for (const auto& [a, b] : sorted.pairs) arr.push_back({a, b});
  return arr;
}

}  // namespace

std::string witness_json(const Matching& matching, std::uint64_t n) {
  Json j;
  j["n"] = n;
  j["model"] = to_string(matching.model);
  j["secant"] = {matching.secant.c1, matching.secant.c2};
  j["pairs"] = pairs_json(matching);
  return j.dump();
}

std::pair<Matching, std::uint64_t> parse_witness_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("witness is not valid JSON: ") + e.what());
  }
  try {
    Matching m;
    m.model = parse_model(j.at("model").get<std::string>());
    const auto cuts = j.at("secant").get<std::vector<std::uint64_t>>();
    if (cuts.size() != 2) throw ParseError("secant must have two cuts");
    m.secant = {cuts[0], cuts[1]};
    for (const auto& p : j.at("pairs")) {
      const auto ij = p.get<std::vector<std::uint64_t>>();
      if (ij.size() != 2) throw ParseError("each pair must have two bead indices");
      m.pairs.emplace_back(ij[0], ij[1]);
    }
    const std::uint64_t n = j.contains("n") ? j.at("n").get<std::uint64_t>() : j.at("N").get<std::uint64_t>();
    return {m, n};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed witness: ") + e.what());
  }
}

std::string solve_result_json(const SolveResult& r) {
  Json j;
  j["n_red"] = r.n_red;
  j["n_blue"] = r.n_blue;
  j["N"] = r.n;
  j["model"] = to_string(r.model);
  j["covered"] = r.covered;
  j["ratio"] = r.ratio_string();
  j["secant"] = {r.witness.secant.c1, r.witness.secant.c2};
  j["pairs"] = pairs_json(r.witness);
  j["rotations_examined"] = r.rotations_examined;
  j["rotations_pruned"] = r.rotations_pruned;
  return j.dump();
}

std::string preset_sidecar_json(const Instance& instance) {
  Json j;
  j["preset"] = instance.preset;
  j["N"] = instance.necklace.size();
  j["red"] = instance.necklace.red_count();
  j["blue"] = instance.necklace.blue_count();
  j["mono"] = mono(instance.necklace);
  j["phi_achieved"] = instance.phi_achieved;
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace necklace
