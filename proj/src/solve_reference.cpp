// Serial reference solver: every rotation, no bound, no period dedup.

#include "solve_detail.hpp"

namespace necklace {

SolveResult solve_reference(const Necklace& necklace, Model model, bool want_witness) {
  detail::check_solvable(necklace, Necklace::kDefaultDenseLimit);
  const std::uint64_t n = necklace.size();
  const DenseWord twice = detail::doubled(necklace.dense());

  std::uint64_t best_pairs = 0;
  std::uint64_t best_cut = 0;
  for (std::uint64_t c = 0; c < n; ++c) {
    const std::uint64_t pairs = kernels::nested_pairs(std::span<const Color>(twice.data() + c, n), model);
    if (pairs > best_pairs) {
      best_pairs = pairs;
      best_cut = c;
    }
  }
  SolveResult r = detail::make_result(necklace, twice, model, best_cut, best_pairs, want_witness);
  r.rotations_examined = n;
  return r;
}

}  // namespace necklace
