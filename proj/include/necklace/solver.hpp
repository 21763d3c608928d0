// Maximum proper matchings on a necklace.
//
// With one cut fixed at c, the circle reads as a linear word w = rotate(L, c)
// and a proper matching is a chain of nested pairs w[a1..am] / w[bm..b1]
// with a1 < ... < am < bm < ... < b1; the second cut falls anywhere between
// am and bm. The optimum over all secants is therefore the best nested chain
// over all rotations.

#ifndef NECKLACE_SOLVER_HPP
#define NECKLACE_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "necklace/core.hpp"

namespace necklace {

struct SolveOptions {
  bool pruning = true;
  bool want_witness = true;
  /// Only the first `rotation_limit` distinct rotations are considered.
  std::optional<std::uint64_t> rotation_limit;
  int worker_count = 1;
  /// Instances larger than this are rejected with SizeLimitError.
  std::uint64_t max_n = 4096;
};

struct SolveResult {
  std::uint64_t n = 0;
  std::uint64_t n_red = 0;
  std::uint64_t n_blue = 0;
  Model model = Model::Hetero;
  /// Covered beads, 2 * |witness.pairs|.
  std::uint64_t covered = 0;
  /// Secant and pairs; pairs empty when the witness was not requested.
  Matching witness;
  std::uint64_t rotations_examined = 0;
  std::uint64_t rotations_pruned = 0;

  /// covered / n rounded half-up to six decimals.
  std::string ratio_string() const;
  double ratio() const { return n == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(n); }
};

struct FixedSecantResult {
  std::uint64_t pairs = 0;
  Matching witness;
};

/// Maximum proper matching for one exact secant, as an alignment of A1
/// against reversed A2 under the model's color predicate.
FixedSecantResult solve_fixed_secant(const Necklace& necklace, const Secant& secant, Model model);

/// Exact optimum over all secants. Rotations are deduplicated by the word's
/// period, bounded with rotation_upper_bound, and solved in parallel; the
/// result (witness included) does not depend on worker_count.
SolveResult solve(const Necklace& necklace, Model model, const SolveOptions& opts = {});

/// Serial reference: every rotation, no pruning, no dedup. Same tie-breaking
/// as solve(), so results are identical.
SolveResult solve_reference(const Necklace& necklace, Model model, bool want_witness = true);

/// LCS(w, reverse-complement(w)) for Hetero, LCS(w, reverse(w)) for Homo.
/// An upper bound on covered beads for the rotation w.
std::uint64_t rotation_upper_bound(std::span<const Color> word, Model model);

/// Exhaustive search over secants and cross-free pair sets. N <= 16.
std::uint64_t oracle_exhaustive(const Necklace& necklace, Model model);

/// Longest non-crossing alternating path (vertex count) by exhaustive search. N <= 14.
std::uint64_t longest_ncap(const Necklace& necklace);

/// Trivial matching of size ceil(n/2) (Hetero) or floor(n/2) (Homo) on a
/// balanced necklace with n beads of each color.
Matching baseline_half(const Necklace& necklace, Model model);

namespace kernels {

/// Rolling-row interval DP: maximum nested chain of model-colored pairs in w.
std::uint32_t nested_pairs(std::span<const Color> w, Model model);

/// Full triangular DP over w followed by the fixed-preference backtrack
/// (match ends, then drop left, then drop right). Positions are indices into w.
std::vector<BeadPair> nested_pairs_witness(std::span<const Color> w, Model model);

/// Bit-parallel LCS length of two words over {Red, Blue}.
std::uint64_t lcs_bitparallel(std::span<const Color> a, std::span<const Color> b);

/// Textbook quadratic LCS, kept as the kernel's test reference.
std::uint64_t lcs_quadratic(std::span<const Color> a, std::span<const Color> b);

}  // namespace kernels

}  // namespace necklace

#endif  // NECKLACE_SOLVER_HPP
