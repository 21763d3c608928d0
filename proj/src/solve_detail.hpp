#ifndef NECKLACE_SOLVE_DETAIL_HPP
#define NECKLACE_SOLVE_DETAIL_HPP

#include "necklace/solver.hpp"

namespace necklace::detail {

/// w followed by w, so rotation c is the window [c, c + n).
DenseWord doubled(const DenseWord& w);

void check_solvable(const Necklace& necklace, std::uint64_t max_n);

/// Fills counts, the winning cut and (optionally) the witness for rotation `cut`.
SolveResult make_result(const Necklace& necklace, const DenseWord& twice, Model model,
                        std::uint64_t cut, std::uint64_t pairs, bool want_witness);

}  // namespace necklace::detail

#endif  // NECKLACE_SOLVE_DETAIL_HPP
