// Efficiency of a matching on an interval, closed-form bound curves, and
// experiment sweeps that emit figure-ready CSV.

#ifndef NECKLACE_ANALYSIS_HPP
#define NECKLACE_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "necklace/core.hpp"
#include "necklace/solver.hpp"

namespace necklace {

/// Clockwise bead range [start, start + length) taken mod N.
struct BeadRange {
  std::uint64_t start = 0;
  std::uint64_t length = 0;
};

struct EfficiencyReport {
  BeadRange interval;
  /// Arc spanned by the partners of the interval's first and last matched
  /// bead; length 0 when the interval has no matched bead.
  BeadRange span;
  std::uint64_t covered_in_union = 0;
  std::uint64_t union_size = 0;
  double eff = 0.0;
};

/// `interval` must lie inside one arc of the matching's secant.
EfficiencyReport efficiency(const Necklace& necklace, const Matching& matching, const BeadRange& interval);

/// Reports for the maximal monochromatic pieces of A1. Their unions are
/// disjoint and hold every covered bead, so the best of them is at least
/// covered / N.
std::vector<EfficiencyReport> arc_efficiencies(const Necklace& necklace, const Matching& matching);

struct BalancedBounds {
  double simple_bound;  ///< 2/3
  double dust_bound;    ///< 2 - sqrt(2)
  double lambda_star;   ///< 1 - 1/sqrt(2)
};

BalancedBounds balanced_bounds();

/// 2/(psi2+1) = 4 phi / (3 phi + 1 + sqrt(5 phi^2 + 2 phi + 1)), 1 <= phi <= 2.
/// The value is the same for both models.
double unbalanced_bound(double phi, Model model);

/// 4 / (phi + 3 + sqrt(phi^2 + 2 phi + 5)), which equals 2/(psi1+1).
/// Kept for comparison; it is not an upper bound for phi > 1.
double unbalanced_bound_alternate(double phi);

struct TrivialBounds {
  double lower;
  double upper;
};

/// Homo: (phi/(1+phi), 1). Hetero: (1/(1+phi), 2/(1+phi)). 1 <= phi <= 2.
TrivialBounds trivial_bounds(double phi, Model model);

struct BoundRow {
  double phi;
  double p;
  double construction_bound;
  double trivial_lower;
  double trivial_upper;
  double psi1;
  double psi2;
  Model model;
};

/// Rows at phi_from + k*step up to phi_to (inclusive within half a step).
std::vector<BoundRow> bound_table(double phi_from, double phi_to, double step, Model model);

std::string bound_table_csv(const std::vector<BoundRow>& rows);

/// Six fractional digits, "%.6f".
std::string fixed6(double value);

struct SweepSpec {
  /// simple | dust_desk | dust_paper | unbalanced_desk | bounds
  std::string family;
  std::vector<std::uint64_t> s;
  std::vector<std::string> lambda;  ///< rational text, dust_desk only
  std::vector<std::string> phi;     ///< rational text, unbalanced_desk only
  int scale = 2;
  Model model = Model::Hetero;
  SolveOptions solve;
  bool timing = true;  ///< runtime_ms column; zero when false
  // bounds family
  double phi_from = 1.0, phi_to = 2.0, step = 0.01;
};

/// Reads the JSON experiment description.
SweepSpec parse_sweep_spec(const std::string& json_text);

struct SweepRow {
  std::string preset;
  std::uint64_t s = 0;
  std::optional<double> lambda;
  std::optional<double> phi;
  std::uint64_t n = 0;
  Model model = Model::Hetero;
  std::uint64_t covered = 0;
  std::string ratio;
  std::uint64_t mono = 0;
  double runtime_ms = 0.0;
  std::string status;  ///< ok | skipped | error
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

inline constexpr const char* kSweepHeader = "preset,s,lambda,phi,N,model,covered,ratio,mono,runtime_ms,status";

/// Header plus one row per instance; the bounds family yields bound_table_csv instead.
std::string sweep_csv(const SweepSpec& spec);
std::string sweep_rows_csv(const std::vector<SweepRow>& rows);

}  // namespace necklace

#endif  // NECKLACE_ANALYSIS_HPP
