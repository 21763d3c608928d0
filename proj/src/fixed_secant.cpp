#include <algorithm>

#include "necklace/solver.hpp"

namespace necklace {

FixedSecantResult solve_fixed_secant(const Necklace& necklace, const Secant& secant, Model model) {
  const std::uint64_t n = necklace.size();
  if (secant.c1 == secant.c2) throw std::invalid_argument("secant cuts must differ");
  if (secant.c1 >= n || secant.c2 >= n) throw std::invalid_argument("secant cut out of range");
  const DenseWord word = necklace.dense();

  // x: A1 clockwise from c1. y: A2 read counter-clockwise from c1, so a
  // cross-free matching is a common subsequence of x and y.
  std::vector<std::uint64_t> x, y;
  for (std::uint64_t b = secant.c1; b != secant.c2; b = (b + 1) % n) x.push_back(b);
  for (std::uint64_t b = (secant.c1 + n - 1) % n;; b = (b + n - 1) % n) {
    y.push_back(b);
    if (b == secant.c2) break;
  }

  const std::size_t rows = x.size() + 1, cols = y.size() + 1;
  std::vector<std::uint32_t> t(rows * cols, 0);
  auto at = [&](std::size_t a, std::size_t b) -> std::uint32_t& { return t[a * cols + b]; };
  auto match = [&](std::size_t a, std::size_t b) { return pair_allowed(model, word[x[a - 1]], word[y[b - 1]]); };
  for (std::size_t a = 1; a < rows; ++a)
    for (std::size_t b = 1; b < cols; ++b)
      at(a, b) = match(a, b) ? at(a - 1, b - 1) + 1 : std::max(at(a - 1, b), at(a, b - 1));

  FixedSecantResult out;
  out.pairs = at(rows - 1, cols - 1);
  out.witness.secant = secant;
  out.witness.model = model;
  for (std::size_t a = rows - 1, b = cols - 1; a > 0 && b > 0;) {
    if (match(a, b) && at(a, b) == at(a - 1, b - 1) + 1) {
      out.witness.pairs.emplace_back(x[a - 1], y[b - 1]);
      --a;
      --b;
    } else if (at(a, b) == at(a - 1, b)) {
      --a;
    } else {
      --b;
    }
  }
  canonicalize(out.witness);
  return out;
}

}  // namespace necklace
