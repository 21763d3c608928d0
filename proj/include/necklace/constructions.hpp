// Generators for the counterexample necklace families.
//
// All generators emit run-length form directly; the paper-scale presets are
// far too large to expand densely.

#ifndef NECKLACE_CONSTRUCTIONS_HPP
#define NECKLACE_CONSTRUCTIONS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "necklace/core.hpp"

namespace necklace {

/// Exact p/q when the text was a fraction or a finite decimal.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Parses "p/q" or a decimal such as "0.25".
Rational parse_rational(std::string_view text);

/// Integer power with overflow detection.
std::uint64_t ipow(std::uint64_t base, std::uint64_t exp);

struct SimpleParams {
  std::uint64_t s = 2;
};

/// s large arcs; arc L_i alternates s^(s-i) red and s^(s-i) blue runs of
/// length s^i, each large arc starting red.
Necklace gen_simple(const SimpleParams& params);

struct DustLevel {
  std::uint64_t arc_pairs = 0;  ///< red/blue arc pairs in this large arc
  std::uint64_t arc_len = 0;    ///< beads per arc
  std::uint64_t tiny_len = 0;   ///< beads per tiny interval

  friend bool operator==(const DustLevel&, const DustLevel&) = default;
};

enum class PresetKind { Paper, Desk, Custom };

struct DustParams {
  std::vector<DustLevel> levels;
  double lambda = 0.0;
  /// When set, dust sizes are computed exactly from it instead of `lambda`.
  std::optional<Rational> lambda_exact;
  PresetKind preset = PresetKind::Custom;
  std::uint64_t s = 0;

  /// floor(lambda * tiny_len) for the given level.
  std::uint64_t dust_size(const DustLevel& level) const;

  /// Throws std::invalid_argument describing the first broken invariant.
  void validate() const;

  /// S = s levels with m_i = s^(2s-i), A_i = s^(3s+i), T_i = s^(2s-i).
  static DustParams paper(std::uint64_t s, std::optional<Rational> lambda = std::nullopt);

  /// Solvable analog: m_i = s^(s+1-i), A_i = s^(s+2+scale+i), T_i = s^(s+3-i).
  /// s = 2 with the default scale gives N = 2048.
  static DustParams desk(std::uint64_t s, Rational lambda, int scale = 2);
};

/// 1 - 1/sqrt(2), the dust fraction that balances the efficiency bound.
double optimal_lambda();

Necklace gen_dust(const DustParams& params);

/// 8 * s^(4s), the closed-form bound on mono() for the paper preset.
boost::multiprecision::cpp_int mono_bound_paper(std::uint64_t s);

double psi1(double phi);
double psi2(double phi);

struct UnbalancedParams {
  double phi = 1.0;  ///< requested red/blue ratio
  double p = 0.5;    ///< phi / (1 + phi)
  Model model = Model::Hetero;
  /// t, u, v, w and psi are for max(phi, 1/phi); colors are swapped on output when phi < 1.
  double t = 0, u = 0, v = 0, w = 0;
  double psi1 = 0, psi2 = 0;
  bool colors_swapped = false;

  double solved_phi() const { return colors_swapped ? 1.0 / phi : phi; }
  /// Absolute residuals of t+w=phi, u+v=1 and the two model equations.
  std::vector<double> residuals() const;
};

/// Unique solution of the model's linear system. 1/2 <= phi <= 2.
UnbalancedParams solve_unbalanced_params(double phi, Model model);

struct UnbalancedNecklace {
  Necklace necklace;
  double phi_achieved = 0;  ///< red_count / blue_count
  double slack = 0;         ///< guaranteed bound on |phi_achieved - phi|
};

/// Unbalanced dust construction over a profile of levels (lambda unused).
/// Odd arcs are red with blue dust u*T per tiny interval of (t+u)*T beads;
/// even arcs are blue with red dust w*T per tiny interval of (v+w)*T beads.
UnbalancedNecklace gen_unbalanced(const UnbalancedParams& params, const std::vector<DustLevel>& profile);

/// A generated instance plus the sweep/CLI metadata describing it.
struct Instance {
  std::string preset;
  std::string family;  ///< simple | dust | unbalanced
  Necklace necklace;
  std::uint64_t s = 0;
  std::optional<double> lambda;
  std::optional<double> phi;
  std::optional<Model> model;
  double phi_achieved = 1.0;
};

/// "simple:s=<k>", "dust:paper:s=<k>[,lambda=<q>]",
/// "dust:desk:s=<k>,lambda=<q>[,scale=<e>]",
/// "unbalanced:desk:s=<k>,phi=<q>,model=<m>[,scale=<e>]".
Instance generate_preset(std::string_view name);

}  // namespace necklace

#endif  // NECKLACE_CONSTRUCTIONS_HPP
