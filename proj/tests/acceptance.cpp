// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.
// Seeds, sample counts and tolerances are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <random>
#include <string>
#include <vector>

#include "necklace/analysis.hpp"
#include "necklace/constructions.hpp"
#include "necklace/io.hpp"
#include "necklace/solver.hpp"
#include "test_support.hpp"

using namespace necklace;

namespace {

constexpr double kClosedFormTol = 1e-12;
constexpr double kHandSolvedTol = 1e-6;
constexpr double kOracleBudgetS = 300.0;
constexpr double kSimpleBudgetS = 10.0;
constexpr double kDustBudgetS = 600.0;

// Locked goldens for the simple construction (exact covered counts).
constexpr std::uint64_t kSimple2Hetero = 16, kSimple2Homo = 14;
constexpr std::uint64_t kSimple3Hetero = 138, kSimple3Homo = 136;

constexpr Model kModels[] = {Model::Hetero, Model::Homo};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Instances reused by the determinism criterion.
std::vector<Necklace> g_replay;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  std::uint64_t checked = 0;
  for (std::uint64_t n : {4, 6, 8, 10, 12})
    for (const Necklace& l : testing::all_balanced(n)) {
      g_replay.push_back(l);
      for (Model m : kModels) {
        ++checked;
        if (solve(l, m).covered != oracle_exhaustive(l, m)) o.fail(render(l) + " " + to_string(m));
      }
    }
  std::mt19937_64 rng(1001);
  for (int k = 0; k < 500;) {
    const Necklace l = testing::random_necklace(rng, 2 + rng() % 11);
    if (l.balanced()) continue;
    ++k;
    g_replay.push_back(l);
    for (Model m : kModels) {
      ++checked;
      if (solve(l, m).covered != oracle_exhaustive(l, m)) o.fail(render(l) + " " + to_string(m));
    }
  }
  const double t = seconds_since(start);
  if (t > kOracleBudgetS) o.fail("runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(checked) + " instance/model pairs, " + std::to_string(t) + " s";
  return o;
}

Outcome secant_sweep_equivalence() {
  Outcome o;
  std::mt19937_64 rng(1002);
  for (int k = 0; k < 200; ++k) {
    const std::uint64_t n = 2 + rng() % 47;
    const Necklace l = k % 2 ? testing::random_balanced(rng, std::max<std::uint64_t>(1, n / 2))
                             : testing::random_necklace(rng, n);
    g_replay.push_back(l);
    for (Model m : kModels) {
      std::uint64_t best = 0;
      for (std::uint64_t c1 = 0; c1 < l.size(); ++c1)
        for (std::uint64_t c2 = 0; c2 < l.size(); ++c2)
          if (c1 != c2) best = std::max(best, 2 * solve_fixed_secant(l, {c1, c2}, m).pairs);
      if (best != solve(l, m).covered) o.fail(render(l) + " " + to_string(m));
    }
  }
  if (o.pass) o.detail = "200 necklaces, both models";
  return o;
}

Outcome trivial_lower_bound() {
  Outcome o;
  std::mt19937_64 rng(1003);
  for (int k = 0; k < 1000; ++k) {
    const std::uint64_t half = 1 + rng() % 100;
    const Necklace l = testing::random_balanced(rng, half);
    for (Model m : kModels) {
      const Matching mt = baseline_half(l, m);
      const std::uint64_t need = m == Model::Hetero ? (half + 1) / 2 : half / 2;
      if (auto v = validate_matching(l, mt)) o.fail(render(l) + " " + v->describe());
      if (mt.pairs.size() < need) o.fail(render(l) + " " + to_string(m) + " too few pairs");
    }
  }
  if (o.pass) o.detail = "1000 balanced necklaces, N <= 200";
  return o;
}

Outcome replication() {
  Outcome o;
  std::mt19937_64 rng(1004);
  for (int k = 0; k < 100; ++k) {
    const Necklace l = testing::random_balanced(rng, 1 + rng() % 5);
    const std::uint64_t base = solve(l, Model::Hetero).covered;
    for (std::uint64_t i : {2, 3}) {
      const std::uint64_t rep = solve(replicate(l, i), Model::Hetero).covered;
      if (rep != i * base)
        o.fail(render(l) + " x" + std::to_string(i) + ": " + std::to_string(rep) + " != " + std::to_string(i * base));
    }
  }
  if (o.pass) o.detail = "100 balanced necklaces, i in {2,3}";
  return o;
}

Outcome simple_trend() {
  Outcome o;
  const Necklace s2 = gen_simple({2}), s3 = gen_simple({3});
  g_replay.push_back(s2);
  g_replay.push_back(s3);
  std::string text;
  for (Model m : kModels) {
    const SolveResult r2 = solve(s2, m);
    const auto start = Clock::now();
    const SolveResult r3 = solve(s3, m);
    const double t = seconds_since(start);
    const bool het = m == Model::Hetero;
    if (r2.covered != (het ? kSimple2Hetero : kSimple2Homo)) o.fail("s=2 golden drift: " + std::to_string(r2.covered));
    if (r3.covered != (het ? kSimple3Hetero : kSimple3Homo)) o.fail("s=3 golden drift: " + std::to_string(r3.covered));
    if (!(r3.ratio() < r2.ratio())) o.fail("ratio did not decrease");
    if (t > kSimpleBudgetS) o.fail("N=162 solve took " + std::to_string(t) + " s");
    text += to_string(m) + " " + r2.ratio_string() + " -> " + r3.ratio_string() + "; ";
  }
  if (o.pass) o.detail = text.substr(0, text.size() - 2);
  return o;
}

Outcome unbalanced_closed_forms() {
  Outcome o;
  for (Model m : kModels)
    for (int k = 0; k <= 100; ++k) {
      const double phi = 1.0 + 0.01 * k;
      for (double r : solve_unbalanced_params(phi, m).residuals())
        if (!(r < kClosedFormTol)) o.fail("residual " + std::to_string(r) + " at phi=" + std::to_string(phi));
    }
  const auto near = [&](double got, double want, double tol, const char* what) {
    if (!(std::abs(got - want) <= tol)) o.fail(std::string(what) + " = " + std::to_string(got));
  };
  near(unbalanced_bound(1.0, Model::Hetero), 2.0 - std::sqrt(2.0), kClosedFormTol, "bound(1)");
  near(unbalanced_bound(2.0, Model::Hetero), 2.0 / 3.0, kClosedFormTol, "bound(2)");
  near(psi2(2.0), 2.0, kClosedFormTol, "psi2(2)");
  const UnbalancedParams p = solve_unbalanced_params(2.0, Model::Hetero);
  near(p.u, 0.535184, kHandSolvedTol, "u");
  near(p.t, 1.767592, kHandSolvedTol, "t");
  if (o.pass) o.detail = "grid [1,2] step 0.01 both models; u=" + std::to_string(p.u) + " t=" + std::to_string(p.t);
  return o;
}

Outcome dust_structure() {
  Outcome o;
  std::string text;
  for (std::uint64_t s : {2, 3}) {
    const Necklace l = gen_dust(DustParams::paper(s));
    const boost::multiprecision::cpp_int m = mono(l), bound = mono_bound_paper(s);
    if (!l.balanced()) o.fail("paper(" + std::to_string(s) + ") unbalanced");
    if (m > bound) o.fail("paper(" + std::to_string(s) + ") mono " + m.str() + " > " + bound.str());
    text += "s=" + std::to_string(s) + " N=" + std::to_string(l.size()) + " mono=" + m.str() + "<=" + bound.str() + "; ";
  }
  const double ls = optimal_lambda();
  const double root = 2 * ls * ls - 4 * ls + 1;
  if (!(std::abs(root) <= kClosedFormTol)) o.fail("lambda* residual " + std::to_string(root));
  if (o.pass) o.detail = text + "lambda* ok";
  return o;
}

Outcome sandwich() {
  Outcome o;
  std::uint64_t count = 0;
  for (std::uint64_t n : {2, 4, 6, 8, 10})
    for (const Necklace& l : testing::all_balanced(n)) {
      ++count;
      const std::uint64_t c = solve(l, Model::Hetero).covered, p = longest_ncap(l);
      if (c > p) o.fail(render(l) + ": " + std::to_string(c) + " > " + std::to_string(p));
    }
  if (o.pass) o.detail = std::to_string(count) + " balanced necklaces, N <= 10";
  return o;
}

std::string without_counters(const std::string& json) {
  auto j = nlohmann::ordered_json::parse(json);
  j.erase("rotations_examined");
  j.erase("rotations_pruned");
  return j.dump();
}

Outcome determinism() {
  Outcome o;
  SolveOptions one, four, off;
  four.worker_count = 4;
  off.pruning = false;
  for (const Necklace& l : g_replay)
    for (Model m : kModels) {
      const std::string a = solve_result_json(solve(l, m, one));
      if (a != solve_result_json(solve(l, m, four))) o.fail(render(l) + " threads 1 vs 4");
      if (without_counters(a) != without_counters(solve_result_json(solve(l, m, off))))
        o.fail(render(l) + " pruning on vs off");
    }
  if (o.pass) o.detail = std::to_string(g_replay.size()) + " instances x 2 models";
  return o;
}

Outcome performance() {
  Outcome o;
  const Necklace l = generate_preset("dust:desk:s=2,lambda=1/4").necklace;
  SolveOptions opts;
  opts.worker_count = 4;
  const auto start = Clock::now();
  const SolveResult r = solve(l, Model::Hetero, opts);
  const double t = seconds_since(start);
  if (l.size() != 2048) o.fail("N=" + std::to_string(l.size()));
  if (t > kDustBudgetS) o.fail("took " + std::to_string(t) + " s");
  if (r.rotations_pruned == 0) o.fail("no rotation pruned");
  if (o.pass)
    o.detail = "N=2048 covered=" + std::to_string(r.covered) + " pruned=" + std::to_string(r.rotations_pruned) +
               " examined=" + std::to_string(r.rotations_examined) + " " + std::to_string(t) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"secant-sweep equivalence", secant_sweep_equivalence},
      {"trivial lower bound", trivial_lower_bound},
      {"replication", replication},
      {"simple construction trend", simple_trend},
      {"unbalanced closed forms", unbalanced_closed_forms},
      {"dust structure", dust_structure},
      {"sandwich", sandwich},
      {"determinism and pruning", determinism},
      {"performance envelope", performance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("criterion %2zu %-26s %s  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
