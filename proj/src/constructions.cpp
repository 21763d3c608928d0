#include "necklace/constructions.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace necklace {

namespace {

// Generators refuse to build run lists longer than this.
constexpr std::uint64_t kMaxRuns = std::uint64_t{1} << 26;

class RunBuilder {
 public:
  void add(Color c, std::uint64_t len) {
    if (len == 0) return;
    if (!runs_.empty() && runs_.back().color == c) {
      runs_.back().length += len;
    } else {
      if (runs_.size() >= kMaxRuns) throw std::length_error("construction exceeds the run-count limit");
      runs_.push_back({c, len});
    }
  }
  Necklace build() const { return Necklace::from_runs(runs_); }

 private:
  std::vector<Run> runs_;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::overflow_error("bead count overflows 64 bits");
  return a * b;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("not an integer: '" + std::string(text) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = parse_int(text.substr(0, slash));
    r.den = parse_int(text.substr(slash + 1));
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.size() > 15) throw ParseError("too many decimal digits: '" + std::string(text) + "'");
    r.den = static_cast<std::int64_t>(ipow(10, frac.size()));
    r.num = (whole.empty() ? 0 : parse_int(whole)) * r.den + (frac.empty() ? 0 : parse_int(frac));
  } else {
    r.num = parse_int(text);
  }
  if (r.den <= 0 || r.num < 0) throw ParseError("expected a non-negative number: '" + std::string(text) + "'");
  const std::int64_t g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t k = 0; k < exp; ++k) out = checked_mul(out, base);
  return out;
}

Necklace gen_simple(const SimpleParams& params) {
  const std::uint64_t s = params.s;
  if (s < 2) throw std::invalid_argument("simple construction needs s >= 2");
  checked_mul(2, ipow(s, s + 1));
  RunBuilder out;
  for (std::uint64_t i = 1; i <= s; ++i) {
    const std::uint64_t arcs = ipow(s, s - i), len = ipow(s, i);
    for (std::uint64_t k = 0; k < arcs; ++k) {
      out.add(Color::Red, len);
      out.add(Color::Blue, len);
    }
  }
  return out.build();
}

double optimal_lambda() { return 1.0 - 1.0 / std::sqrt(2.0); }

std::uint64_t DustParams::dust_size(const DustLevel& level) const {
  if (lambda_exact) {
    const auto scaled = static_cast<unsigned __int128>(lambda_exact->num) * level.tiny_len;
    return static_cast<std::uint64_t>(scaled / static_cast<unsigned __int128>(lambda_exact->den));
  }
  return static_cast<std::uint64_t>(std::floor(static_cast<long double>(lambda) * level.tiny_len));
}

void DustParams::validate() const {
  if (levels.empty()) throw std::invalid_argument("dust construction needs at least one level");
  if (!(lambda > 0.0) || lambda > 0.5) throw std::invalid_argument("lambda must lie in (0, 1/2]");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const DustLevel& l = levels[i];
    const std::string where = "level " + std::to_string(i + 1) + ": ";
    if (l.arc_pairs == 0 || l.arc_len == 0 || l.tiny_len == 0)
      throw std::invalid_argument(where + "counts must be positive");
    if (l.arc_len % l.tiny_len != 0) throw std::invalid_argument(where + "tiny length must divide arc length");
    const std::uint64_t d = dust_size(l);
    if (d < 1) throw std::invalid_argument(where + "dust vanishes (floor(lambda*T) < 1)");
    if (d >= l.tiny_len) throw std::invalid_argument(where + "dust swallows the tiny interval");
    if (i > 0 && l.arc_len <= levels[i - 1].arc_len)
      throw std::invalid_argument(where + "arc lengths must increase with the level");
    if (i > 0 && l.tiny_len >= levels[i - 1].tiny_len)
      throw std::invalid_argument(where + "tiny lengths must decrease with the level");
  }
}

DustParams DustParams::paper(std::uint64_t s, std::optional<Rational> lambda) {
  if (s < 2) throw std::invalid_argument("dust construction needs s >= 2");
  DustParams p;
  p.preset = PresetKind::Paper;
  p.s = s;
  p.lambda = lambda ? lambda->value() : optimal_lambda();
  p.lambda_exact = lambda;
  for (std::uint64_t i = 1; i <= s; ++i)
    p.levels.push_back({ipow(s, 2 * s - i), ipow(s, 3 * s + i), ipow(s, 2 * s - i)});
  return p;
}

DustParams DustParams::desk(std::uint64_t s, Rational lambda, int scale) {
  if (s < 2) throw std::invalid_argument("dust construction needs s >= 2");
  if (scale < -1) throw std::invalid_argument("desk scale must be >= -1");
  DustParams p;
  p.preset = PresetKind::Desk;
  p.s = s;
  p.lambda = lambda.value();
  p.lambda_exact = lambda;
  for (std::uint64_t i = 1; i <= s; ++i) {
    const auto arc_exp = static_cast<std::uint64_t>(static_cast<std::int64_t>(s + 2 + i) + scale);
    p.levels.push_back({ipow(s, s + 1 - i), ipow(s, arc_exp), ipow(s, s + 3 - i)});
  }
  return p;
}

Necklace gen_dust(const DustParams& params) {
  params.validate();
  std::uint64_t total = 0;
  for (const DustLevel& l : params.levels)
    total += checked_mul(2, checked_mul(l.arc_pairs, l.arc_len));
  (void)total;

  RunBuilder out;
  for (const DustLevel& l : params.levels) {
    const std::uint64_t dust = params.dust_size(l);
    const std::uint64_t tiny_per_arc = l.arc_len / l.tiny_len;
    for (std::uint64_t k = 0; k < l.arc_pairs; ++k) {
      for (Color main : {Color::Red, Color::Blue}) {
        for (std::uint64_t q = 0; q < tiny_per_arc; ++q) {
          out.add(main, l.tiny_len - dust);
          out.add(complement(main), dust);
        }
      }
    }
  }
  return out.build();
}

boost::multiprecision::cpp_int mono_bound_paper(std::uint64_t s) {
  if (s < 2) throw std::invalid_argument("mono bound needs s >= 2");
  return 8 * boost::multiprecision::pow(boost::multiprecision::cpp_int(s), static_cast<unsigned>(4 * s));
}

double psi1(double phi) {
  const double a = phi + 1.0;
  return (a + std::sqrt(a * a + 4.0)) / 2.0;
}

double psi2(double phi) {
  const double a = (phi + 1.0) / phi;
  return (a + std::sqrt(a * a + 4.0)) / 2.0;
}

std::vector<double> UnbalancedParams::residuals() const {
  const double f = solved_phi();
  // Homo pairs v with psi1 and t with psi2; Hetero swaps them.
  const double v_coef = model == Model::Homo ? psi1 : psi2;
  const double t_coef = model == Model::Homo ? psi2 : psi1;
  return {std::abs(t + w - f), std::abs(u + v - 1.0), std::abs(v - v_coef * w), std::abs(t - t_coef * u)};
}

UnbalancedParams solve_unbalanced_params(double phi, Model model) {
  if (!(phi >= 0.5 - 1e-12 && phi <= 2.0 + 1e-12)) throw std::invalid_argument("phi must lie in [1/2, 2]");
  UnbalancedParams r;
  r.phi = phi;
  r.p = phi / (1.0 + phi);
  r.model = model;
  r.colors_swapped = phi < 1.0;
  const double f = r.solved_phi();
  r.psi1 = psi1(f);
  r.psi2 = psi2(f);
  const double t_coef = model == Model::Homo ? r.psi2 : r.psi1;
  const double v_coef = model == Model::Homo ? r.psi1 : r.psi2;
  // t_coef*u + w = f and u + v_coef*w = 1.
  const double det = t_coef * v_coef - 1.0;
  r.u = (v_coef * f - 1.0) / det;
  r.w = (t_coef - f) / det;
  r.t = t_coef * r.u;
  r.v = v_coef * r.w;
  return r;
}

UnbalancedNecklace gen_unbalanced(const UnbalancedParams& params, const std::vector<DustLevel>& profile) {
  if (profile.empty()) throw std::invalid_argument("profile needs at least one level");
  constexpr long double eps = 1e-9L;
  for (const DustLevel& l : profile) {
    if (l.arc_pairs == 0 || l.tiny_len == 0 || l.arc_len % l.tiny_len != 0)
      throw std::invalid_argument("profile levels need positive counts and T dividing A");
    if (params.u * static_cast<double>(l.tiny_len) < 1.0 - 1e-9 ||
        params.w * static_cast<double>(l.tiny_len) < 1.0 - 1e-9)
      throw std::invalid_argument("profile too small: u*T and w*T must be at least one bead");
  }

  // Each color keeps a running fractional remainder, so the total of every
  // color stays within one bead of its ideal count.
  long double red_carry = 0, blue_carry = 0;
  auto take = [&](long double& carry, long double ideal) {
    carry += ideal;
    const auto len = static_cast<std::uint64_t>(std::floor(carry + eps));
    carry -= static_cast<long double>(len);
    return len;
  };

  RunBuilder out;
  std::uint64_t arc_pairs_total = 0;
  for (const DustLevel& l : profile) {
    const auto tiny = static_cast<long double>(l.tiny_len);
    const std::uint64_t tiny_per_arc = l.arc_len / l.tiny_len;
    arc_pairs_total += l.arc_pairs;
    for (std::uint64_t k = 0; k < l.arc_pairs; ++k) {
      for (std::uint64_t q = 0; q < tiny_per_arc; ++q) {
        out.add(Color::Red, take(red_carry, params.t * tiny));
        out.add(Color::Blue, take(blue_carry, params.u * tiny));
      }
      for (std::uint64_t q = 0; q < tiny_per_arc; ++q) {
        out.add(Color::Blue, take(blue_carry, params.v * tiny));
        out.add(Color::Red, take(red_carry, params.w * tiny));
      }
    }
  }

  UnbalancedNecklace result{out.build(), 0, 0};
  if (params.colors_swapped) result.necklace = complement(result.necklace);
  const auto red = static_cast<double>(result.necklace.red_count());
  const auto blue = static_cast<double>(result.necklace.blue_count());
  if (blue == 0) throw std::invalid_argument("profile too small: no blue beads");
  result.phi_achieved = red / blue;
  result.slack = 2.0 * static_cast<double>(profile.size()) * static_cast<double>(arc_pairs_total) / blue;
  if (std::abs(result.phi_achieved - params.phi) > result.slack)
    throw std::invalid_argument("profile too small for the rounding guarantee");
  return result;
}

namespace {

std::map<std::string, std::string, std::less<>> parse_fields(std::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value in preset: '" + std::string(item) + "'");
    fields.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return fields;
}

const std::string& require(const std::map<std::string, std::string, std::less<>>& fields, std::string_view key) {
  auto it = fields.find(key);
  if (it == fields.end()) throw ParseError("preset is missing '" + std::string(key) + "'");
  return it->second;
}

}  // namespace

Instance generate_preset(std::string_view name) {
  Instance inst;
  inst.preset = std::string(name);
  std::string_view rest;
  std::string_view kind;
  if (name.starts_with("simple:")) {
    kind = "simple";
    rest = name.substr(7);
  } else if (name.starts_with("dust:paper:")) {
    kind = "dust:paper";
    rest = name.substr(11);
  } else if (name.starts_with("dust:desk:")) {
    kind = "dust:desk";
    rest = name.substr(10);
  } else if (name.starts_with("unbalanced:desk:")) {
    kind = "unbalanced:desk";
    rest = name.substr(16);
  } else {
    throw ParseError("unknown preset '" + std::string(name) + "'");
  }
  const auto fields = parse_fields(rest);
  const auto s = static_cast<std::uint64_t>(parse_int(require(fields, "s")));
  inst.s = s;
  const int scale = fields.contains("scale") ? static_cast<int>(parse_int(fields.find("scale")->second)) : 2;

  if (kind == "simple") {
    inst.family = "simple";
    inst.necklace = gen_simple({s});
  } else if (kind == "dust:paper") {
    inst.family = "dust";
    std::optional<Rational> lambda;
    if (fields.contains("lambda")) lambda = parse_rational(fields.find("lambda")->second);
    DustParams p = DustParams::paper(s, lambda);
    inst.lambda = p.lambda;
    inst.necklace = gen_dust(p);
  } else if (kind == "dust:desk") {
    inst.family = "dust";
    DustParams p = DustParams::desk(s, parse_rational(require(fields, "lambda")), scale);
    inst.lambda = p.lambda;
    inst.necklace = gen_dust(p);
  } else {
    inst.family = "unbalanced";
    const double phi = parse_rational(require(fields, "phi")).value();
    const Model model = parse_model(require(fields, "model"));
    const UnbalancedParams params = solve_unbalanced_params(phi, model);
    // The profile reuses the desk levels; lambda plays no role here.
    const DustParams profile = DustParams::desk(s, {1, 4}, scale);
    UnbalancedNecklace g = gen_unbalanced(params, profile.levels);
    inst.phi = phi;
    inst.model = model;
    inst.necklace = std::move(g.necklace);
  }
  inst.phi_achieved = static_cast<double>(inst.necklace.red_count()) / static_cast<double>(inst.necklace.blue_count());
  return inst;
}

}  // namespace necklace
