// Parallel exact solver.
//
// Rotations are processed in batches of fixed size. Every rotation in a
// batch is checked against the best (covered, cut) key known when the batch
// starts, so the set of pruned rotations, and therefore every reported
// counter, is the same for any number of workers.

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <numeric>

#include "solve_detail.hpp"

namespace necklace {

namespace {

constexpr std::size_t kBatch = 32;

// Larger key wins: more covered beads first, then the smaller cut.
constexpr std::uint64_t rank_key(std::uint64_t covered, std::uint64_t cut) {
  return (covered << 32) | (0xffffffffu - cut);
}

constexpr std::uint64_t key_cut(std::uint64_t key) { return 0xffffffffu - (key & 0xffffffffu); }

}  // namespace

std::string SolveResult::ratio_string() const {
  if (n == 0) return "0.000000";
  const std::uint64_t scaled = (covered * 2000000 + n) / (2 * n);
  std::string frac = std::to_string(scaled % 1000000);
  return std::to_string(scaled / 1000000) + "." + std::string(6 - frac.size(), '0') + frac;
}

namespace detail {

DenseWord doubled(const DenseWord& w) {
  DenseWord out(w);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

void check_solvable(const Necklace& necklace, std::uint64_t max_n) {
  if (necklace.size() < 2) throw std::invalid_argument("solve requires N >= 2");
  if (necklace.size() > max_n) {
    throw SizeLimitError("N = " + std::to_string(necklace.size()) + " exceeds the solver limit " +
                         std::to_string(max_n));
  }
}

SolveResult make_result(const Necklace& necklace, const DenseWord& twice, Model model,
                        std::uint64_t cut, std::uint64_t pairs, bool want_witness) {
  const std::uint64_t n = necklace.size();
  SolveResult r;
  r.n = n;
  r.n_red = necklace.red_count();
  r.n_blue = necklace.blue_count();
  r.model = model;
  r.covered = 2 * pairs;
  r.witness.model = model;
  r.witness.secant = {cut, (cut + 1) % n};
  if (!want_witness) return r;

  const std::span<const Color> w(twice.data() + cut, n);
  const std::vector<BeadPair> local = kernels::nested_pairs_witness(w, model);
  if (!local.empty()) {
    // Second cut just before the innermost right endpoint.
    r.witness.secant.c2 = (cut + local.back().second) % n;
  }
  for (const auto& [a, b] : local) r.witness.pairs.emplace_back((cut + a) % n, (cut + b) % n);
  canonicalize(r.witness);
  return r;
}

}  // namespace detail

SolveResult solve(const Necklace& necklace, Model model, const SolveOptions& opts) {
  detail::check_solvable(necklace, opts.max_n);
  if (opts.want_witness && necklace.size() > 8192)
    throw SizeLimitError("witness reconstruction is limited to N <= 8192");
  if (necklace.size() >= (std::uint64_t{1} << 31))
    throw SizeLimitError("N too large for the rotation key");

  const std::uint64_t n = necklace.size();
  const DenseWord twice = detail::doubled(necklace.dense(opts.max_n));
  std::uint64_t rotations = period(necklace);
  if (opts.rotation_limit) rotations = std::min(rotations, std::max<std::uint64_t>(1, *opts.rotation_limit));
  const int workers = std::max(1, opts.worker_count);
  auto window = [&](std::uint64_t c) { return std::span<const Color>(twice.data() + c, n); };

  std::vector<std::uint64_t> order(rotations);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::vector<std::uint64_t> bound(rotations, n);
  if (opts.pruning) {
#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(rotations); ++c)
      bound[c] = rotation_upper_bound(window(c), model);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint64_t a, std::uint64_t b) { return bound[a] > bound[b]; });
  }

  std::uint64_t best_key = 0;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  std::vector<std::uint64_t> keys(kBatch);

  for (std::size_t start = 0; start < order.size(); start += kBatch) {
    const std::size_t count = std::min(kBatch, order.size() - start);
    const std::uint64_t snapshot = best_key;
    if (opts.pruning && rank_key(bound[order[start]], order[start]) < snapshot) {
      // Bounds are sorted descending, so every remaining rotation is dominated.
      pruned += order.size() - start;
      break;
    }
    std::atomic<std::uint64_t> batch_pruned{0};
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
      const std::uint64_t c = order[start + k];
      if (opts.pruning && rank_key(bound[c], c) < snapshot) {
        keys[k] = 0;
        batch_pruned.fetch_add(1, std::memory_order_relaxed);
        continue;
      }
      keys[k] = rank_key(2 * std::uint64_t{kernels::nested_pairs(window(c), model)}, c);
    }
    pruned += batch_pruned.load();
    examined += count - batch_pruned.load();
    for (std::size_t k = 0; k < count; ++k) best_key = std::max(best_key, keys[k]);
  }

  const std::uint64_t cut = key_cut(best_key);
  const std::uint64_t covered = best_key >> 32;
  SolveResult r = detail::make_result(necklace, twice, model, cut, covered / 2, opts.want_witness);
  r.rotations_examined = examined;
  r.rotations_pruned = pruned;
  return r;
}

}  // namespace necklace
