#include "necklace/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

namespace necklace {

std::string to_string(Model m) { return m == Model::Hetero ? "hetero" : "homo"; }

Model parse_model(std::string_view text) {
  if (text == "hetero") return Model::Hetero;
  if (text == "homo") return Model::Homo;
  throw ParseError("unknown model '" + std::string(text) + "' (expected hetero|homo)");
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw std::overflow_error("bead count overflows 64 bits");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::overflow_error("bead count overflows 64 bits");
  return a * b;
}

// Circular run list plus the circular coordinate of dense bead 0.
Necklace from_circular(std::vector<Run> runs, std::uint64_t coordinate) {
  // Re-emit as linear runs starting at `coordinate`; from_runs canonicalizes.
  std::uint64_t start = 0;
  std::size_t k = 0;
  while (start + runs[k].length <= coordinate) {
    start += runs[k].length;
    ++k;
  }
  const std::uint64_t skip = coordinate - start;
  std::vector<Run> linear;
  linear.reserve(runs.size() + 1);
  linear.push_back({runs[k].color, runs[k].length - skip});
  for (std::size_t i = 1; i < runs.size(); ++i) linear.push_back(runs[(k + i) % runs.size()]);
  if (skip > 0) linear.push_back({runs[k].color, skip});
  return Necklace::from_runs(linear);
}

}  // namespace

Necklace Necklace::from_runs(const std::vector<Run>& linear_runs) {
  if (linear_runs.empty()) throw ParseError("necklace must contain at least one bead");
  Necklace out;
  for (const Run& r : linear_runs) {
    if (r.length == 0) throw ParseError("zero-length run");
    if (!out.runs_.empty() && out.runs_.back().color == r.color) {
      out.runs_.back().length = checked_add(out.runs_.back().length, r.length);
    } else {
      out.runs_.push_back(r);
    }
    out.size_ = checked_add(out.size_, r.length);
    if (r.color == Color::Red) out.red_ += r.length;
  }
  if (out.runs_.size() >= 2 && out.runs_.front().color == out.runs_.back().color) {
    out.origin_ = out.runs_.back().length;
    out.runs_.front().length += out.runs_.back().length;
    out.runs_.pop_back();
  }
  return out;
}

Necklace Necklace::from_dense(const DenseWord& word) {
  std::vector<Run> runs;
  for (Color c : word) {
    if (!runs.empty() && runs.back().color == c) {
      ++runs.back().length;
    } else {
      runs.push_back({c, 1});
    }
  }
  return from_runs(runs);
}

std::vector<Run> Necklace::linear_runs() const {
  if (origin_ == 0) return runs_;
  std::vector<Run> out;
  out.reserve(runs_.size() + 1);
  out.push_back({runs_[0].color, runs_[0].length - origin_});
  out.insert(out.end(), runs_.begin() + 1, runs_.end());
  out.push_back({runs_[0].color, origin_});
  return out;
}

DenseWord Necklace::dense(std::uint64_t limit) const {
  if (size_ > limit) {
    throw SizeLimitError("necklace has " + std::to_string(size_) +
                         " beads, above the dense expansion limit " + std::to_string(limit));
  }
  DenseWord word;
  word.reserve(size_);
  for (const Run& r : linear_runs()) word.insert(word.end(), r.length, r.color);
  return word;
}

Color Necklace::color_at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("bead index out of range");
  std::uint64_t pos = (origin_ + index) % size_;
  for (const Run& r : runs_) {
    if (pos < r.length) return r.color;
    pos -= r.length;
  }
  return runs_.back().color;  // unreachable
}

Necklace parse_necklace(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' ||
                           text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty necklace text");

  std::vector<Run> runs;
  if (text.starts_with("rle:")) {
    std::string_view body = text.substr(4);
    if (body.empty()) throw ParseError("rle: form with no runs");
    while (!body.empty()) {
      std::uint64_t count = 0;
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), count);
      if (ptr == body.data()) throw ParseError("expected run count in rle text");
      if (ec == std::errc::result_out_of_range) throw ParseError("run count out of range");
      body.remove_prefix(static_cast<std::size_t>(ptr - body.data()));
      if (body.empty()) throw ParseError("run count without color");
      const char c = body.front();
      if (c != 'R' && c != 'B') throw ParseError(std::string("illegal color character '") + c + "'");
      if (count == 0) throw ParseError("zero-length run");
      runs.push_back({c == 'R' ? Color::Red : Color::Blue, count});
      body.remove_prefix(1);
    }
  } else {
    for (char c : text) {
      if (c != 'R' && c != 'B') throw ParseError(std::string("illegal character '") + c + "'");
      const Color color = c == 'R' ? Color::Red : Color::Blue;
      if (!runs.empty() && runs.back().color == color) {
        ++runs.back().length;
      } else {
        runs.push_back({color, 1});
      }
    }
  }
  return Necklace::from_runs(runs);
}

std::string render_dense(const Necklace& necklace) {
  std::string out;
  for (const Run& r : necklace.linear_runs()) out.append(r.length, to_char(r.color));
  return out;
}

std::string render_rle(const Necklace& necklace) {
  std::string out = "rle:";
  for (const Run& r : necklace.linear_runs()) {
    out += std::to_string(r.length);
    out += to_char(r.color);
  }
  return out;
}

std::string render(const Necklace& necklace) {
  return necklace.size() <= 4096 ? render_dense(necklace) : render_rle(necklace);
}

std::uint64_t mono(const Necklace& necklace) noexcept { return necklace.runs().size(); }

Necklace rotate(const Necklace& necklace, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(necklace.size());
  const auto shift = static_cast<std::uint64_t>(((k % n) + n) % n);
  if (necklace.runs().size() == 1) return necklace;
  return from_circular(necklace.runs(), (necklace.origin() + shift) % necklace.size());
}

Necklace replicate(const Necklace& necklace, std::uint64_t factor) {
  if (factor == 0) throw std::invalid_argument("replication factor must be >= 1");
  std::vector<Run> runs = necklace.linear_runs();
  for (Run& r : runs) r.length = checked_mul(r.length, factor);
  return Necklace::from_runs(runs);
}

Necklace complement(const Necklace& necklace) {
  std::vector<Run> runs = necklace.linear_runs();
  for (Run& r : runs) r.color = complement(r.color);
  return Necklace::from_runs(runs);
}

Necklace reverse(const Necklace& necklace) {
  std::vector<Run> runs = necklace.linear_runs();
  std::reverse(runs.begin(), runs.end());
  return Necklace::from_runs(runs);
}

std::uint64_t period(const Necklace& necklace) {
  const auto& runs = necklace.runs();
  if (runs.size() == 1) return 1;
  // Primitive period of the circular run sequence via the KMP failure table.
  const std::size_t m = runs.size();
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && !(runs[i] == runs[k])) k = fail[k - 1];
    if (runs[i] == runs[k]) ++k;
    fail[i] = k;
  }
  std::size_t p = m - fail[m - 1];
  if (m % p != 0) p = m;
  std::uint64_t beads = 0;
  for (std::size_t i = 0; i < p; ++i) beads += runs[i].length;
  return beads;
}

void canonicalize(Matching& matching) {
  for (auto& [a, b] : matching.pairs)
    if (a > b) std::swap(a, b);
  std::sort(matching.pairs.begin(), matching.pairs.end());
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::IndexOutOfRange: return "IndexOutOfRange";
    case ViolationKind::DuplicateBead: return "DuplicateBead";
    case ViolationKind::NotSecantRespecting: return "NotSecantRespecting";
    case ViolationKind::ColorRule: return "ColorRule";
    case ViolationKind::Crossing: return "Crossing";
  }
  return "Unknown";
}

std::string Violation::describe() const {
  std::string out = to_string(kind);
  if (!pairs.empty()) {
    out += " (pair";
    if (pairs.size() > 1) out += "s";
    for (std::size_t i = 0; i < pairs.size(); ++i) out += (i ? ", " : " ") + std::to_string(pairs[i]);
    out += ")";
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> find_crossing_nested(
    std::uint64_t n, std::uint64_t cut, const std::vector<BeadPair>& pairs) {
  struct Event {
    std::uint64_t pos;
    std::size_t pair;
    bool open;
  };
  std::vector<Event> events;
  events.reserve(2 * pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    std::uint64_t a = (pairs[k].first + n - cut) % n;
    std::uint64_t b = (pairs[k].second + n - cut) % n;
    if (a > b) std::swap(a, b);
    events.push_back({a, k, true});
    events.push_back({b, k, false});
  }
  std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) { return x.pos < y.pos; });
  std::vector<std::size_t> stack;
  for (const Event& e : events) {
    if (e.open) {
      stack.push_back(e.pair);
    } else if (stack.back() != e.pair) {
      return std::pair{std::min(stack.back(), e.pair), std::max(stack.back(), e.pair)};
    } else {
      stack.pop_back();
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> find_crossing_pairwise(
    const std::vector<BeadPair>& pairs) {
  for (std::size_t x = 0; x < pairs.size(); ++x)
    for (std::size_t y = x + 1; y < pairs.size(); ++y)
      if (chords_cross(pairs[x].first, pairs[x].second, pairs[y].first, pairs[y].second))
        return std::pair{x, y};
  return std::nullopt;
}

std::optional<Violation> validate_matching(const Necklace& necklace, const Matching& matching) {
  const std::uint64_t n = necklace.size();
  const Secant& s = matching.secant;
  if (s.c1 >= n || s.c2 >= n || s.c1 == s.c2)
    throw std::invalid_argument("secant cuts must be distinct and in [0, N)");
  const auto& pairs = matching.pairs;

  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k].first >= n || pairs[k].second >= n)
      return Violation{ViolationKind::IndexOutOfRange, {k}};

  std::vector<std::pair<std::uint64_t, std::size_t>> used;
  used.reserve(2 * pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    used.emplace_back(pairs[k].first, k);
    used.emplace_back(pairs[k].second, k);
  }
  std::sort(used.begin(), used.end());
  for (std::size_t i = 1; i < used.size(); ++i)
    if (used[i].first == used[i - 1].first) {
      const auto a = std::min(used[i - 1].second, used[i].second);
      const auto b = std::max(used[i - 1].second, used[i].second);
      return Violation{ViolationKind::DuplicateBead, a == b ? std::vector{a} : std::vector{a, b}};
    }

  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (in_first_arc(s, n, pairs[k].first) == in_first_arc(s, n, pairs[k].second))
      return Violation{ViolationKind::NotSecantRespecting, {k}};

  // Colors are looked up through one dense pass when cheap, per bead otherwise.
  const bool small = n <= (1u << 20);
  const DenseWord word = small ? necklace.dense() : DenseWord{};
  auto color = [&](std::uint64_t i) { return small ? word[i] : necklace.color_at(i); };
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (!pair_allowed(matching.model, color(pairs[k].first), color(pairs[k].second)))
      return Violation{ViolationKind::ColorRule, {k}};

  if (auto crossing = find_crossing_nested(n, s.c1, pairs))
    return Violation{ViolationKind::Crossing, {crossing->first, crossing->second}};
  return std::nullopt;
}

}  // namespace necklace
