// Exhaustive searches for tiny necklaces. Deliberately written against the
// circle definitions directly; nothing here is shared with the DP solvers.

#include <algorithm>
#include <functional>

#include "necklace/solver.hpp"

namespace necklace {

namespace {

// Chords {a,b} and {c,d} on a circle of points 0..n-1 interleave.
bool interleave(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  if (a == c || a == d || b == c || b == d) return false;
  auto strictly_between = [](std::uint64_t lo, std::uint64_t hi, std::uint64_t p) {
    return std::min(lo, hi) < p && p < std::max(lo, hi);
  };
  return strictly_between(a, b, c) != strictly_between(a, b, d);
}

std::vector<Color> bead_colors(const Necklace& necklace) {
  std::vector<Color> colors(necklace.size());
  for (std::uint64_t i = 0; i < necklace.size(); ++i) colors[i] = necklace.color_at(i);
  return colors;
}

}  // namespace

std::uint64_t oracle_exhaustive(const Necklace& necklace, Model model) {
  const std::uint64_t n = necklace.size();
  if (n > 16) throw SizeLimitError("oracle_exhaustive is limited to N <= 16");
  const std::vector<Color> color = bead_colors(necklace);

  std::uint64_t best = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> chosen;
  for (std::uint64_t c1 = 0; c1 < n; ++c1) {
    for (std::uint64_t c2 = c1 + 1; c2 < n; ++c2) {
      std::vector<std::uint64_t> first, second;
      for (std::uint64_t b = 0; b < n; ++b) (c1 <= b && b < c2 ? first : second).push_back(b);
      std::vector<bool> used(n, false);

      // Each bead of the first arc is either left single or joined to an
      // unused bead of the second arc, keeping all chords non-interleaving.
      std::function<void(std::size_t)> extend = [&](std::size_t t) {
        best = std::max<std::uint64_t>(best, chosen.size());
        if (t == first.size() || chosen.size() + (first.size() - t) <= best) return;
        const std::uint64_t a = first[t];
        for (std::uint64_t b : second) {
          if (used[b] || !pair_allowed(model, color[a], color[b])) continue;
          bool ok = true;
          for (const auto& [p, q] : chosen)
            if (interleave(a, b, p, q)) {
              ok = false;
              break;
            }
          if (!ok) continue;
          used[b] = true;
          chosen.emplace_back(a, b);
          extend(t + 1);
          chosen.pop_back();
          used[b] = false;
        }
        extend(t + 1);
      };
      extend(0);
    }
  }
  return 2 * best;
}

std::uint64_t longest_ncap(const Necklace& necklace) {
  const std::uint64_t n = necklace.size();
  if (n > 14) throw SizeLimitError("longest_ncap is limited to N <= 14");
  const std::vector<Color> color = bead_colors(necklace);

  std::uint64_t best = n > 0 ? 1 : 0;
  std::vector<std::uint64_t> path;
  std::vector<bool> on_path(n, false);
  std::function<void()> extend = [&]() {
    best = std::max<std::uint64_t>(best, path.size());
    if (best == n) return;
    const std::uint64_t last = path.back();
    for (std::uint64_t v = 0; v < n; ++v) {
      if (on_path[v] || color[v] == color[last]) continue;
      bool ok = true;
      for (std::size_t k = 0; k + 1 < path.size(); ++k)
        if (interleave(last, v, path[k], path[k + 1])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      on_path[v] = true;
      path.push_back(v);
      extend();
      path.pop_back();
      on_path[v] = false;
    }
  };
  for (std::uint64_t start = 0; start < n && best < n; ++start) {
    on_path[start] = true;
    path.assign(1, start);
    extend();
    on_path[start] = false;
  }
  return best;
}

}  // namespace necklace
