#include "necklace/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "necklace/constructions.hpp"

namespace necklace {

namespace {

std::vector<std::int64_t> partner_table(std::uint64_t n, const Matching& matching) {
  if (n > (std::uint64_t{1} << 26)) throw SizeLimitError("efficiency is limited to N <= 2^26");
  std::vector<std::int64_t> partner(n, -1);
  for (const auto& [a, b] : matching.pairs) {
    partner[a] = static_cast<std::int64_t>(b);
    partner[b] = static_cast<std::int64_t>(a);
  }
  return partner;
}

EfficiencyReport efficiency_with(const Matching& matching, std::uint64_t n, const std::vector<std::int64_t>& partner,
                                 const BeadRange& interval) {
  if (interval.length == 0 || interval.length > n) throw std::invalid_argument("interval must be nonempty");
  const Secant& s = matching.secant;
  const bool in_a1 = in_first_arc(s, n, interval.start);
  for (std::uint64_t k = 0; k < interval.length; ++k)
    if (in_first_arc(s, n, (interval.start + k) % n) != in_a1)
      throw std::invalid_argument("interval straddles the secant");

  EfficiencyReport r;
  r.interval = interval;
  std::int64_t first = -1, last = -1;
  std::uint64_t covered_inside = 0;
  for (std::uint64_t k = 0; k < interval.length; ++k) {
    const std::uint64_t b = (interval.start + k) % n;
    if (partner[b] < 0) continue;
    ++covered_inside;
    if (first < 0) first = partner[b];
    last = partner[b];
  }
  if (first < 0) {
    r.span = {0, 0};
    r.union_size = interval.length;
    return r;
  }

  // Partners live in the other arc, which is contiguous from its own cut.
  const std::uint64_t other_start = in_a1 ? s.c2 : s.c1;
  const std::uint64_t p1 = (static_cast<std::uint64_t>(first) + n - other_start) % n;
  const std::uint64_t p2 = (static_cast<std::uint64_t>(last) + n - other_start) % n;
  const std::uint64_t lo = std::min(p1, p2), hi = std::max(p1, p2);
  r.span = {(other_start + lo) % n, hi - lo + 1};
  std::uint64_t covered_span = 0;
  for (std::uint64_t k = 0; k < r.span.length; ++k)
    if (partner[(r.span.start + k) % n] >= 0) ++covered_span;
  r.covered_in_union = covered_inside + covered_span;
  r.union_size = interval.length + r.span.length;
  r.eff = static_cast<double>(r.covered_in_union) / static_cast<double>(r.union_size);
  return r;
}

}  // namespace

EfficiencyReport efficiency(const Necklace& necklace, const Matching& matching, const BeadRange& interval) {
  const std::uint64_t n = necklace.size();
  return efficiency_with(matching, n, partner_table(n, matching), interval);
}

std::vector<EfficiencyReport> arc_efficiencies(const Necklace& necklace, const Matching& matching) {
  const std::uint64_t n = necklace.size();
  const auto partner = partner_table(n, matching);
  const DenseWord w = necklace.dense();
  const Secant& s = matching.secant;
  const std::uint64_t arc_len = (s.c2 + n - s.c1) % n;

  std::vector<EfficiencyReport> out;
  std::uint64_t k = 0;
  while (k < arc_len) {
    const Color c = w[(s.c1 + k) % n];
    std::uint64_t len = 1;
    while (k + len < arc_len && w[(s.c1 + k + len) % n] == c) ++len;
    out.push_back(efficiency_with(matching, n, partner, {(s.c1 + k) % n, len}));
    k += len;
  }
  return out;
}

BalancedBounds balanced_bounds() {
  return {2.0 / 3.0, 2.0 - std::sqrt(2.0), 1.0 - 1.0 / std::sqrt(2.0)};
}

namespace {

double folded_phi(double phi) {
  if (!(phi >= 0.5 - 1e-12 && phi <= 2.0 + 1e-12)) throw std::invalid_argument("phi must lie in [1/2, 2]");
  return phi < 1.0 ? 1.0 / phi : phi;
}

}  // namespace

double unbalanced_bound(double phi, Model /*model*/) {
  const double f = folded_phi(phi);
  return 4.0 * f / (3.0 * f + 1.0 + std::sqrt(5.0 * f * f + 2.0 * f + 1.0));
}

double unbalanced_bound_alternate(double phi) {
  const double f = folded_phi(phi);
  return 4.0 / (f + 3.0 + std::sqrt(f * f + 2.0 * f + 5.0));
}

TrivialBounds trivial_bounds(double phi, Model model) {
  const double f = folded_phi(phi);
  if (model == Model::Homo) return {f / (1.0 + f), 1.0};
  return {1.0 / (1.0 + f), 2.0 / (1.0 + f)};
}

std::vector<BoundRow> bound_table(double phi_from, double phi_to, double step, Model model) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  if (phi_to < phi_from) throw std::invalid_argument("phi range is empty");
  const auto count = static_cast<std::uint64_t>(std::floor((phi_to - phi_from) / step + 0.5)) + 1;
  std::vector<BoundRow> rows;
  rows.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    const double phi = phi_from + static_cast<double>(k) * step;
    const TrivialBounds tb = trivial_bounds(phi, model);
    rows.push_back({phi, phi / (1.0 + phi), unbalanced_bound(phi, model), tb.lower, tb.upper, psi1(phi), psi2(phi),
                    model});
  }
  return rows;
}

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string bound_table_csv(const std::vector<BoundRow>& rows) {
  std::string out = "phi,p,construction_bound,trivial_lower,trivial_upper,psi1,psi2,model\n";
  for (const BoundRow& r : rows) {
    out += fixed6(r.phi) + ',' + fixed6(r.p) + ',' + fixed6(r.construction_bound) + ',' + fixed6(r.trivial_lower) +
           ',' + fixed6(r.trivial_upper) + ',' + fixed6(r.psi1) + ',' + fixed6(r.psi2) + ',' + to_string(r.model) +
           '\n';
  }
  return out;
}

}  // namespace necklace
