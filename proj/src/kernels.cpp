// Inner loops shared by the parallel and reference solvers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "necklace/solver.hpp"

namespace necklace::kernels {

namespace {

// Color of a bead that may pair with a bead of color c under model m.
inline std::uint8_t partner_code(Color c, Model m) {
  const auto code = static_cast<std::uint8_t>(c);
  return m == Model::Hetero ? code ^ 1u : code;
}

class Triangle {
 public:
  explicit Triangle(std::size_t n) : n_(n), cells_(n * (n + 1) / 2, 0) {}

  std::uint16_t& at(std::size_t i, std::size_t j) { return cells_[row(i) + (j - i)]; }
  std::uint16_t get(std::size_t i, std::size_t j) const {
    return i > j ? 0 : cells_[row(i) + (j - i)];
  }

 private:
  std::size_t row(std::size_t i) const { return i * n_ - (i * (i - 1)) / 2; }

  std::size_t n_;
  std::vector<std::uint16_t> cells_;
};

}  // namespace

std::uint32_t nested_pairs(std::span<const Color> w, Model model) {
  const std::size_t n = w.size();
  if (n < 2) return 0;
  // prev = D[i+1][.], cur = D[i][.]; cells left of the diagonal stay 0.
  std::vector<std::uint32_t> prev(n, 0), cur(n, 0);
  const auto* word = reinterpret_cast<const std::uint8_t*>(w.data());
  for (std::size_t i = n - 1; i-- > 0;) {
    const std::uint8_t want = partner_code(w[i], model);
    std::uint32_t left = 0;  // D[i][j-1]
    cur[i] = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint32_t diag = prev[j - 1] + (word[j] == want ? 1u : 0u);
      const std::uint32_t v = std::max({prev[j], left, diag});
      cur[j] = v;
      left = v;
    }
    std::swap(prev, cur);
  }
  return prev[n - 1];
}

std::vector<BeadPair> nested_pairs_witness(std::span<const Color> w, Model model) {
  const std::size_t n = w.size();
  std::vector<BeadPair> pairs;
  if (n < 2) return pairs;
  if (n > 8192) throw SizeLimitError("witness reconstruction is limited to N <= 8192");

  auto match = [&](std::size_t i, std::size_t j) { return pair_allowed(model, w[i], w[j]); };
  Triangle d(n);
  for (std::size_t i = n - 1; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const unsigned diag = d.get(i + 1, j - 1) + (match(i, j) ? 1u : 0u);
      d.at(i, j) = static_cast<std::uint16_t>(std::max({unsigned{d.get(i + 1, j)}, unsigned{d.get(i, j - 1)}, diag}));
    }
  }

  std::size_t i = 0, j = n - 1;
  while (i < j && d.get(i, j) > 0) {
    const unsigned here = d.get(i, j);
    if (match(i, j) && here == d.get(i + 1, j - 1) + 1u) {
      pairs.emplace_back(i, j);
      ++i;
      --j;
    } else if (here == d.get(i + 1, j)) {
      ++i;
    } else {
      --j;
    }
  }
  return pairs;
}

std::uint64_t lcs_bitparallel(std::span<const Color> a, std::span<const Color> b) {
  const std::size_t m = a.size();
  if (m == 0 || b.empty()) return 0;
  const std::size_t words = (m + 63) / 64;

  std::vector<std::uint64_t> peq[2] = {std::vector<std::uint64_t>(words, 0),
                                       std::vector<std::uint64_t>(words, 0)};
  for (std::size_t i = 0; i < m; ++i)
    peq[static_cast<std::uint8_t>(a[i])][i / 64] |= std::uint64_t{1} << (i % 64);

  std::vector<std::uint64_t> v(words, ~std::uint64_t{0});
  for (Color c : b) {
    const auto& match = peq[static_cast<std::uint8_t>(c)];
    // V <- (V + (V & M)) | (V & ~M), with the add carried across words.
    std::uint64_t carry = 0;
    for (std::size_t k = 0; k < words; ++k) {
      const std::uint64_t u = v[k] & match[k];
      const std::uint64_t sum1 = v[k] + u;
      const std::uint64_t c1 = sum1 < v[k];
      const std::uint64_t sum = sum1 + carry;
      const std::uint64_t c2 = sum < sum1;
      carry = c1 | c2;
      v[k] = sum | (v[k] & ~match[k]);
    }
  }

  std::uint64_t ones = 0;
  for (std::size_t k = 0; k < words; ++k) {
    std::uint64_t word = v[k];
    if (k == words - 1 && m % 64 != 0) word &= (std::uint64_t{1} << (m % 64)) - 1;
    ones += static_cast<std::uint64_t>(std::popcount(word));
  }
  return m - ones;
}

std::uint64_t lcs_quadratic(std::span<const Color> a, std::span<const Color> b) {
  std::vector<std::uint64_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace necklace::kernels

namespace necklace {

std::uint64_t rotation_upper_bound(std::span<const Color> word, Model model) {
  DenseWord target(word.rbegin(), word.rend());
  if (model == Model::Hetero)
    for (Color& c : target) c = complement(c);
  return kernels::lcs_bitparallel(word, target);
}

}  // namespace necklace
