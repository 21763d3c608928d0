#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "necklace/analysis.hpp"
#include "necklace/constructions.hpp"

namespace necklace {
namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Efficiency, FullyCoveredUnion) {
  const Necklace l = parse_necklace("RRRRBBBB");
  const Matching m{{0, 4}, {{0, 7}, {1, 6}, {2, 5}, {3, 4}}, Model::Hetero};
  ASSERT_FALSE(validate_matching(l, m));
  const EfficiencyReport r = efficiency(l, m, {0, 4});
  EXPECT_EQ(r.span.start, 4u);
  EXPECT_EQ(r.span.length, 4u);
  EXPECT_EQ(r.covered_in_union, 8u);
  EXPECT_EQ(r.union_size, 8u);
  EXPECT_DOUBLE_EQ(r.eff, 1.0);
}

TEST(Efficiency, NoMatchedBead) {
  const Necklace l = parse_necklace("RRRRBBBB");
  const Matching m{{0, 4}, {}, Model::Hetero};
  const EfficiencyReport r = efficiency(l, m, {0, 4});
  EXPECT_EQ(r.span.length, 0u);
  EXPECT_EQ(r.eff, 0.0);
}

TEST(Efficiency, PartialCoverage) {
  // I = beads 0..3 with 0 and 3 matched; partners 9 and 4 span six beads.
  const Necklace l = parse_necklace("RRRRBBBBBBBB");
  const Matching m{{0, 4}, {{0, 9}, {3, 4}}, Model::Hetero};
  ASSERT_FALSE(validate_matching(l, m));
  const EfficiencyReport r = efficiency(l, m, {0, 4});
  EXPECT_EQ(r.span.start, 4u);
  EXPECT_EQ(r.span.length, 6u);
  EXPECT_EQ(r.covered_in_union, 4u);
  EXPECT_EQ(r.union_size, 10u);
  EXPECT_DOUBLE_EQ(r.eff, 0.4);
}

TEST(Efficiency, IntervalInSecondArc) {
  const Necklace l = parse_necklace("RRRRBBBBBBBB");
  const Matching m{{0, 4}, {{0, 9}, {3, 4}}, Model::Hetero};
  const EfficiencyReport r = efficiency(l, m, {4, 6});
  EXPECT_EQ(r.span.start, 0u);
  EXPECT_EQ(r.span.length, 4u);
  EXPECT_EQ(r.covered_in_union, 4u);
  EXPECT_EQ(r.union_size, 10u);
}

TEST(Efficiency, StraddlingIntervalIsRejected) {
  const Necklace l = parse_necklace("RRRRBBBB");
  const Matching m{{0, 4}, {{3, 4}}, Model::Hetero};
  EXPECT_THROW(efficiency(l, m, {2, 4}), std::invalid_argument);
  EXPECT_THROW(efficiency(l, m, {7, 2}), std::invalid_argument);
  EXPECT_THROW(efficiency(l, m, {0, 0}), std::invalid_argument);
}

TEST(Efficiency, BestArcBeatsGlobalRatioOnDustInstances) {
  for (int scale : {-1, 0}) {
    for (const char* lambda : {"1/4", "1/8"}) {
      DustParams p = DustParams::desk(2, parse_rational(lambda), scale);
      const Necklace l = gen_dust(p);
      for (Model model : {Model::Hetero, Model::Homo}) {
        const SolveResult r = solve(l, model);
        const auto reports = arc_efficiencies(l, r.witness);
        ASSERT_FALSE(reports.empty());
        double best = 0.0;
        std::uint64_t total_covered = 0;
        for (const auto& e : reports) {
          ASSERT_GE(e.eff, 0.0);
          ASSERT_LE(e.eff, 1.0);
          best = std::max(best, e.eff);
          total_covered += e.covered_in_union;
        }
        EXPECT_EQ(total_covered, r.covered);
        EXPECT_GE(best + 1e-12, r.ratio()) << lambda << " " << scale;
      }
    }
  }
}

TEST(Bounds, BalancedValues) {
  const BalancedBounds b = balanced_bounds();
  EXPECT_NEAR(b.simple_bound, 2.0 / 3.0, 1e-15);
  EXPECT_GT(b.dust_bound, 0.5857);
  EXPECT_LT(b.dust_bound, 0.5858);
  EXPECT_NEAR(2 * b.lambda_star * b.lambda_star - 4 * b.lambda_star + 1, 0.0, 1e-12);
}

TEST(Bounds, UnbalancedEndpoints) {
  for (Model m : {Model::Hetero, Model::Homo}) {
    EXPECT_NEAR(unbalanced_bound(1.0, m), balanced_bounds().dust_bound, 1e-12);
    EXPECT_NEAR(unbalanced_bound(2.0, m), 2.0 / 3.0, 1e-12);
  }
  EXPECT_NEAR(unbalanced_bound_alternate(2.0), 4.0 / (5.0 + std::sqrt(13.0)), 1e-12);
  EXPECT_NEAR(unbalanced_bound_alternate(2.0), 0.464816, 1e-6);
  EXPECT_NEAR(unbalanced_bound(2.0, Model::Hetero), 2.0 / (psi2(2.0) + 1.0), 1e-12);
  EXPECT_NEAR(unbalanced_bound_alternate(1.5), 2.0 / (psi1(1.5) + 1.0), 1e-12);
  EXPECT_NEAR(unbalanced_bound(0.5, Model::Hetero), unbalanced_bound(2.0, Model::Hetero), 1e-15);
  EXPECT_THROW(unbalanced_bound(2.5, Model::Hetero), std::invalid_argument);
}

TEST(Bounds, TrivialExamples) {
  EXPECT_NEAR(trivial_bounds(2.0, Model::Homo).lower, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(trivial_bounds(2.0, Model::Homo).upper, 1.0, 1e-15);
  EXPECT_NEAR(trivial_bounds(1.0, Model::Hetero).lower, 0.5, 1e-15);
  EXPECT_NEAR(trivial_bounds(1.0, Model::Hetero).upper, 1.0, 1e-15);
  EXPECT_NEAR(trivial_bounds(2.0, Model::Hetero).lower, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(trivial_bounds(2.0, Model::Hetero).upper, 2.0 / 3.0, 1e-15);
}

TEST(Bounds, MonotoneAndSandwichedOnGrid) {
  double prev = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double phi = 1.0 + 0.01 * k;
    const double b = unbalanced_bound(phi, Model::Hetero);
    ASSERT_GT(b, 0.0);
    ASSERT_LE(b, 1.0);
    if (k) ASSERT_GE(b - prev, -1e-12) << phi;
    prev = b;
    const TrivialBounds t = trivial_bounds(phi, Model::Hetero);
    ASSERT_LE(t.lower, b + 1e-12);
    ASSERT_LE(b, t.upper + 1e-12);
  }
  EXPECT_NEAR(unbalanced_bound(2.0, Model::Hetero), trivial_bounds(2.0, Model::Hetero).upper, 1e-12);
}

TEST(BoundTable, GridAndCsv) {
  const auto rows = bound_table(1.0, 2.0, 0.01, Model::Hetero);
  ASSERT_EQ(rows.size(), 101u);
  for (const BoundRow& r : rows) {
    EXPECT_NEAR(r.p, r.phi / (1.0 + r.phi), 1e-15);
    EXPECT_GT(r.construction_bound, 0.0);
    EXPECT_LE(r.construction_bound, 1.0);
  }
  const auto csv = lines(bound_table_csv(bound_table(1.0, 2.0, 0.5, Model::Hetero)));
  ASSERT_EQ(csv.size(), 4u);
  EXPECT_EQ(csv[0], "phi,p,construction_bound,trivial_lower,trivial_upper,psi1,psi2,model");
  EXPECT_EQ(csv[3], "2.000000,0.666667,0.666667,0.333333,0.666667,3.302776,2.000000,hetero");
  EXPECT_THROW(bound_table(1.0, 2.0, 0.0, Model::Hetero), std::invalid_argument);
}

TEST(Sweep, SimpleRows) {
  const SweepSpec spec = parse_sweep_spec(R"({"family":"simple","s":[2,3],"model":"hetero","timing":false})");
  const auto out = lines(sweep_csv(spec));
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0], kSweepHeader);
  EXPECT_EQ(out[1], R"("simple:s=2",2,,,16,hetero,16,1.000000,6,0.000000,ok)");
  EXPECT_EQ(out[2], R"("simple:s=3",3,,,162,hetero,138,0.851852,26,0.000000,ok)");
}

TEST(Sweep, OversizedInstanceIsSkipped) {
  const SweepSpec spec =
      parse_sweep_spec(R"({"family":"dust_desk","s":[2],"lambda":["1/4"],"max_n":1000,"timing":false})");
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].status, "skipped");
  EXPECT_EQ(rows[0].n, 2048u);
}

TEST(Sweep, InvalidParametersAreReported) {
  const SweepSpec spec = parse_sweep_spec(
      R"({"family":"unbalanced_desk","s":[2],"phi":["1.9"],"model":"homo","scale":0,"timing":false})");
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].status, "invalid");
}

TEST(Sweep, BoundsFamily) {
  const SweepSpec spec = parse_sweep_spec(R"({"family":"bounds","model":"homo"})");
  EXPECT_EQ(lines(sweep_csv(spec)).size(), 102u);
}

TEST(Sweep, SpecErrors) {
  EXPECT_THROW(parse_sweep_spec(R"({"family":"spiral","s":[2]})"), ParseError);
  EXPECT_THROW(parse_sweep_spec(R"({"family":"simple"})"), ParseError);
  EXPECT_THROW(parse_sweep_spec(R"({"family":"dust_desk","s":[2]})"), ParseError);
}

}  // namespace
}  // namespace necklace
