// necklace_cli: generate, solve, validate and sweep necklace instances.
//
// Exit status: 0 success, 1 validation failure or guard rejection, 2 usage error.

#include <CLI11.hpp>
#include <iostream>

#include "necklace/analysis.hpp"
#include "necklace/constructions.hpp"
#include "necklace/io.hpp"
#include "necklace/solver.hpp"

using namespace necklace;

namespace {

Necklace load_necklace(const std::string& path) { return parse_necklace(read_file(path)); }

int cmd_gen(const std::string& preset, const std::string& out) {
  const Instance inst = generate_preset(preset);
  const std::string text = render(inst.necklace) + "\n";
  const std::string sidecar = preset_sidecar_json(inst) + "\n";
  if (out.empty()) {
    std::cout << text << sidecar;
  } else {
    write_file(out, text);
    write_file(out + ".json", sidecar);
    std::cout << sidecar;
  }
  return 0;
}

int cmd_solve(const std::string& in, const std::string& model, const std::string& witness, bool no_prune, int threads,
              std::uint64_t max_n) {
  const Necklace necklace = load_necklace(in);
  SolveOptions opts;
  opts.pruning = !no_prune;
  opts.worker_count = threads;
  opts.max_n = max_n;
  const SolveResult r = solve(necklace, parse_model(model), opts);
  std::cout << solve_result_json(r) << "\n";
  if (!witness.empty()) write_file(witness, witness_json(r.witness, r.n) + "\n");
  return 0;
}

int cmd_oracle(const std::string& in, const std::string& model) {
  const Necklace necklace = load_necklace(in);
  const Model m = parse_model(model);
  const std::uint64_t covered = oracle_exhaustive(necklace, m);
  std::cout << R"({"N":)" << necklace.size() << R"(,"model":")" << to_string(m) << R"(","covered":)" << covered
            << "}\n";
  return 0;
}

int cmd_validate(const std::string& in, const std::string& witness) {
  const Necklace necklace = load_necklace(in);
  const auto [matching, n] = parse_witness_json(read_file(witness));
  if (n != necklace.size()) {
    std::cout << "witness declares N=" << n << " but the necklace has N=" << necklace.size() << "\n";
    return 1;
  }
  if (auto v = validate_matching(necklace, matching)) {
    std::cout << v->describe() << "\n";
    return 1;
  }
  std::cout << "ok\n";
  return 0;
}

int cmd_bounds(double from, double to, double step, const std::string& model) {
  std::cout << bound_table_csv(bound_table(from, to, step, parse_model(model)));
  return 0;
}

int cmd_stats(const std::string& in) {
  const Necklace necklace = load_necklace(in);
  std::cout << R"({"N":)" << necklace.size() << R"(,"red":)" << necklace.red_count() << R"(,"blue":)"
            << necklace.blue_count() << R"(,"mono":)" << mono(necklace) << R"(,"period":)" << period(necklace)
            << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for necklace folding (separated matching)"};
  app.require_subcommand(1);

  std::string preset, out, in, model = "hetero", witness, spec;
  bool no_prune = false;
  int threads = 1;
  std::uint64_t max_n = 4096;
  double phi_from = 1.0, phi_to = 2.0, step = 0.01;

  auto* gen = app.add_subcommand("gen", "Generate a preset necklace");
  gen->add_option("--preset", preset, "simple:s=K | dust:paper:s=K | dust:desk:s=K,lambda=Q | "
                                      "unbalanced:desk:s=K,phi=Q,model=M")->required();
  gen->add_option("--out", out, "Necklace file; the sidecar goes to <file>.json");

  auto* solve_cmd = app.add_subcommand("solve", "Maximum proper matching");
  solve_cmd->add_option("--in", in)->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--model", model)->required()->check(CLI::IsMember({"hetero", "homo"}));
  solve_cmd->add_option("--witness", witness, "Write the witness matching JSON here");
  solve_cmd->add_flag("--no-prune", no_prune);
  solve_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-n", max_n, "Refuse instances above this size");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search (N <= 16)");
  oracle->add_option("--in", in)->required()->check(CLI::ExistingFile);
  oracle->add_option("--model", model)->required()->check(CLI::IsMember({"hetero", "homo"}));

  auto* validate = app.add_subcommand("validate", "Check a witness matching");
  validate->add_option("--in", in)->required()->check(CLI::ExistingFile);
  validate->add_option("--witness", witness)->required()->check(CLI::ExistingFile);

  auto* bounds = app.add_subcommand("bounds", "Bound curves as CSV");
  bounds->add_option("--phi-from", phi_from);
  bounds->add_option("--phi-to", phi_to);
  bounds->add_option("--step", step);
  bounds->add_option("--model", model)->check(CLI::IsMember({"hetero", "homo"}));

  auto* sweep = app.add_subcommand("sweep", "Run an experiment grid to CSV");
  sweep->add_option("--spec", spec)->required()->check(CLI::ExistingFile);

  auto* stats = app.add_subcommand("stats", "Size, color counts, mono and period");
  stats->add_option("--in", in)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) return cmd_gen(preset, out);
    if (*solve_cmd) return cmd_solve(in, model, witness, no_prune, threads, max_n);
    if (*oracle) return cmd_oracle(in, model);
    if (*validate) return cmd_validate(in, witness);
    if (*bounds) return cmd_bounds(phi_from, phi_to, step, model);
    if (*sweep) {
      std::cout << sweep_csv(parse_sweep_spec(read_file(spec)));
      return 0;
    }
    if (*stats) return cmd_stats(in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
