// The classical half-size matching: cut the circle into two arcs of n beads
// and pair like-for-like (or majority-for-majority) outward from one cut.

#include <algorithm>

#include "necklace/solver.hpp"

namespace necklace {

namespace {

// Beads of `color` in A1 = [c, c+n) walking backward from the cut at c+n,
// and beads of `other` in A2 = [c+n, c+2n) walking forward from it.
struct Outward {
  std::vector<std::uint64_t> first, second;
};

Outward collect(const DenseWord& w, std::uint64_t c, std::uint64_t half, Color first_color,
                Color second_color) {
  const std::uint64_t n = w.size();
  Outward out;
  for (std::uint64_t k = 1; k <= half; ++k) {
    const std::uint64_t b = (c + half - k) % n;
    if (w[b] == first_color) out.first.push_back(b);
  }
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t b = (c + half + k) % n;
    if (w[b] == second_color) out.second.push_back(b);
  }
  return out;
}

void zip_into(Matching& m, const Outward& o) {
  const std::size_t k = std::min(o.first.size(), o.second.size());
  for (std::size_t i = 0; i < k; ++i) m.pairs.emplace_back(o.first[i], o.second[i]);
}

}  // namespace

Matching baseline_half(const Necklace& necklace, Model model) {
  if (!necklace.balanced() || necklace.size() < 2)
    throw std::invalid_argument("baseline_half requires a balanced necklace with n >= 1");
  const DenseWord w = necklace.dense();
  const std::uint64_t size = w.size();
  const std::uint64_t half = size / 2;

  Matching m;
  m.model = model;

  if (model == Model::Hetero) {
    std::uint64_t red_first = 0;
    for (std::uint64_t b = 0; b < half; ++b) red_first += w[b] == Color::Red;
    // A1 holds r reds and A2 holds r blues, so the larger of r and n-r works.
    const Color major = 2 * red_first >= half ? Color::Red : Color::Blue;
    m.secant = {0, half % size};
    zip_into(m, collect(w, 0, half, major, complement(major)));
    canonicalize(m);
    return m;
  }

  // Homo: choose the half-circle whose blue count is closest to n/2; the
  // count moves by at most one per step and b(c + n) = n - b(c).
  std::uint64_t blue = 0;
  for (std::uint64_t b = 0; b < half; ++b) blue += w[b] == Color::Blue;
  std::uint64_t best_cut = 0, best_score = std::min(blue, half - blue);
  for (std::uint64_t c = 1; c < size; ++c) {
    blue -= w[c - 1] == Color::Blue;
    blue += w[(c + half - 1) % size] == Color::Blue;
    const std::uint64_t score = std::min(blue, half - blue);
    if (score > best_score) {
      best_score = score;
      best_cut = c;
    }
  }
  m.secant = {best_cut, (best_cut + half) % size};

  // Blues with blues nearest the cut, then reds with reds further out.
  const Outward blues = collect(w, best_cut, half, Color::Blue, Color::Blue);
  zip_into(m, blues);
  const std::size_t k = std::min(blues.first.size(), blues.second.size());
  Outward reds = collect(w, best_cut, half, Color::Red, Color::Red);
  if (k > 0) {
    // Drop reds lying inside the outermost blue pair on either side.
    const std::uint64_t edge1 = blues.first[k - 1], edge2 = blues.second[k - 1];
    auto depth1 = [&](std::uint64_t b) { return (best_cut + half + size - 1 - b) % size; };
    auto depth2 = [&](std::uint64_t b) { return (b + size - (best_cut + half) % size) % size; };
    std::erase_if(reds.first, [&](std::uint64_t b) { return depth1(b) < depth1(edge1); });
    std::erase_if(reds.second, [&](std::uint64_t b) { return depth2(b) < depth2(edge2); });
  }
  zip_into(m, reds);
  canonicalize(m);
  return m;
}

}  // namespace necklace
