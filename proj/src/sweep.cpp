// Experiment sweeps: generate each grid point, solve it, emit one CSV row.

#include <chrono>
#include <json.hpp>

#include "necklace/analysis.hpp"
#include "necklace/constructions.hpp"

namespace necklace {

SweepSpec parse_sweep_spec(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  SweepSpec spec;
  spec.family = j.at("family").get<std::string>();
  if (spec.family != "simple" && spec.family != "dust_desk" && spec.family != "dust_paper" &&
      spec.family != "unbalanced_desk" && spec.family != "bounds")
    throw ParseError("unknown sweep family '" + spec.family + "'");

  auto as_text = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.contains("s")) spec.s = j.at("s").get<std::vector<std::uint64_t>>();
  if (j.contains("lambda"))
    for (const auto& v : j.at("lambda")) spec.lambda.push_back(as_text(v));
  if (j.contains("phi"))
    for (const auto& v : j.at("phi")) spec.phi.push_back(as_text(v));
  spec.scale = j.value("scale", 2);
  spec.model = parse_model(j.value("model", std::string("hetero")));
  spec.solve.worker_count = j.value("threads", 1);
  spec.solve.pruning = j.value("prune", true);
  spec.solve.max_n = j.value("max_n", std::uint64_t{4096});
  spec.solve.want_witness = false;
  spec.timing = j.value("timing", true);
  spec.phi_from = j.value("phi_from", 1.0);
  spec.phi_to = j.value("phi_to", 2.0);
  spec.step = j.value("step", 0.01);
  if (spec.family != "bounds" && spec.s.empty()) throw ParseError("sweep spec needs a non-empty 's' list");
  if (spec.family == "dust_desk" && spec.lambda.empty()) throw ParseError("dust_desk sweep needs 'lambda'");
  if (spec.family == "unbalanced_desk" && spec.phi.empty()) throw ParseError("unbalanced_desk sweep needs 'phi'");
  return spec;
}

namespace {

std::vector<std::string> grid_presets(const SweepSpec& spec) {
  std::vector<std::string> names;
  const std::string scale = spec.scale == 2 ? "" : ",scale=" + std::to_string(spec.scale);
  for (std::uint64_t s : spec.s) {
    const std::string ss = "s=" + std::to_string(s);
    if (spec.family == "simple") {
      names.push_back("simple:" + ss);
    } else if (spec.family == "dust_paper") {
      names.push_back("dust:paper:" + ss);
    } else if (spec.family == "dust_desk") {
      for (const auto& l : spec.lambda) names.push_back("dust:desk:" + ss + ",lambda=" + l + scale);
    } else {
      for (const auto& p : spec.phi)
        names.push_back("unbalanced:desk:" + ss + ",phi=" + p + ",model=" + to_string(spec.model) + scale);
    }
  }
  return names;
}

SweepRow run_one(const std::string& preset, const SweepSpec& spec) {
  SweepRow row;
  row.preset = preset;
  row.model = spec.model;
  Instance inst;
  try {
    inst = generate_preset(preset);
  } catch (const std::length_error&) {
    row.status = "skipped";
    return row;
  } catch (const std::exception&) {
    row.status = "invalid";
    return row;
  }
  row.s = inst.s;
  row.lambda = inst.lambda;
  row.phi = inst.phi;
  row.n = inst.necklace.size();
  row.mono = mono(inst.necklace);
  const auto start = std::chrono::steady_clock::now();
  try {
    const SolveResult r = solve(inst.necklace, spec.model, spec.solve);
    row.covered = r.covered;
    row.ratio = r.ratio_string();
    row.status = "ok";
  } catch (const SizeLimitError&) {
    row.status = "skipped";
    return row;
  }
  if (spec.timing)
    row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  std::vector<SweepRow> rows;
  for (const auto& preset : grid_presets(spec)) rows.push_back(run_one(preset, spec));
  return rows;
}

std::string sweep_rows_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kSweepHeader) + '\n';
  for (const SweepRow& r : rows) {
    const bool solved = r.status == "ok";
    // Presets contain commas, so that column is quoted.
    out += '"' + r.preset + "\"," + (r.s ? std::to_string(r.s) : "") + ',' + (r.lambda ? fixed6(*r.lambda) : "") +
           ',' + (r.phi ? fixed6(*r.phi) : "") + ',' + (r.n ? std::to_string(r.n) : "") + ',' +
           to_string(r.model) + ',' + (solved ? std::to_string(r.covered) : "") + ',' + (solved ? r.ratio : "") +
           ',' + (r.n ? std::to_string(r.mono) : "") + ',' + fixed6(r.runtime_ms) + ',' + r.status + '\n';
  }
  return out;
}

std::string sweep_csv(const SweepSpec& spec) {
  if (spec.family == "bounds") return bound_table_csv(bound_table(spec.phi_from, spec.phi_to, spec.step, spec.model));
  return sweep_rows_csv(run_sweep(spec));
}

}  // namespace necklace
