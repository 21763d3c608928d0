// Necklaces, secants and matchings on a circular two-colored word.
//
// Beads are indexed 0..N-1 clockwise. A cut position c sits between bead
// (c-1 mod N) and bead c, so a secant (c1, c2) splits the circle into
// A1 = [c1, c2) and A2 = [c2, c1), both taken clockwise.

#ifndef NECKLACE_CORE_HPP
#define NECKLACE_CORE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace necklace {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

constexpr Color complement(Color c) noexcept {
  return c == Color::Red ? Color::Blue : Color::Red;
}

constexpr char to_char(Color c) noexcept { return c == Color::Red ? 'R' : 'B'; }

enum class Model : std::uint8_t { Hetero, Homo };

constexpr bool pair_allowed(Model m, Color a, Color b) noexcept {
  return m == Model::Hetero ? a != b : a == b;
}

std::string to_string(Model m);
Model parse_model(std::string_view text);

using DenseWord = std::vector<Color>;

/// Input rejected by a parser or a precondition check.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dense expansion or solve was requested past the configured bead limit.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct Run {
  Color color;
  std::uint64_t length;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Immutable circular word in run-length form.
///
/// The run list is normalized circularly: adjacent runs differ in color,
/// including the wraparound pair, so mono() is just the run count. Dense
/// bead 0 lies `origin()` beads into runs()[0]; the origin is kept strictly
/// inside the first run, which makes the representation canonical.
class Necklace {
 public:
  /// Builds from runs listed in dense order starting at bead 0. Adjacent
  /// equal colors are merged; zero-length runs are rejected.
  static Necklace from_runs(const std::vector<Run>& linear_runs);
  static Necklace from_dense(const DenseWord& word);

  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t red_count() const noexcept { return red_; }
  std::uint64_t blue_count() const noexcept { return size_ - red_; }
  bool balanced() const noexcept { return 2 * red_ == size_; }

  const std::vector<Run>& runs() const noexcept { return runs_; }
  std::uint64_t origin() const noexcept { return origin_; }

  /// Runs in dense order from bead 0 (first and last may share a color).
  std::vector<Run> linear_runs() const;

  /// Throws SizeLimitError when size() exceeds `limit`.
  DenseWord dense(std::uint64_t limit = kDefaultDenseLimit) const;

  Color color_at(std::uint64_t index) const;

  static constexpr std::uint64_t kDefaultDenseLimit = 1u << 24;

  friend bool operator==(const Necklace&, const Necklace&) = default;

 private:
  std::vector<Run> runs_;
  std::uint64_t origin_ = 0;
  std::uint64_t size_ = 0;
  std::uint64_t red_ = 0;
};

Necklace parse_necklace(std::string_view text);

/// Dense form when N <= 4096, "rle:" form otherwise.
std::string render(const Necklace& necklace);
std::string render_dense(const Necklace& necklace);
std::string render_rle(const Necklace& necklace);

std::uint64_t mono(const Necklace& necklace) noexcept;

/// Result bead i equals input bead (i + k) mod N.
Necklace rotate(const Necklace& necklace, std::int64_t k);

/// Every bead becomes `factor` consecutive beads of its color.
Necklace replicate(const Necklace& necklace, std::uint64_t factor);

Necklace complement(const Necklace& necklace);

/// Counter-clockwise reading: result bead i equals input bead (N-1-i).
Necklace reverse(const Necklace& necklace);

/// Smallest p dividing N with rotate(L, p) == L.
std::uint64_t period(const Necklace& necklace);

struct Secant {
  std::uint64_t c1 = 0;
  std::uint64_t c2 = 0;

  friend bool operator==(const Secant&, const Secant&) = default;
};

/// True when bead lies in A1 = [c1, c2).
constexpr bool in_first_arc(const Secant& s, std::uint64_t n, std::uint64_t bead) noexcept {
  return (bead + n - s.c1) % n < (s.c2 + n - s.c1) % n;
}

using BeadPair = std::pair<std::uint64_t, std::uint64_t>;

struct Matching {
  Secant secant;
  std::vector<BeadPair> pairs;
  Model model = Model::Hetero;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Orients every pair as (smaller, larger) and sorts by the smaller index.
void canonicalize(Matching& matching);

enum class ViolationKind {
  IndexOutOfRange,
  DuplicateBead,
  NotSecantRespecting,
  ColorRule,
  Crossing,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  /// Indices into Matching::pairs of the offending pair(s).
  std::vector<std::size_t> pairs;

  std::string describe() const;
};

/// Checks, in order: IndexOutOfRange, DuplicateBead, NotSecantRespecting,
/// ColorRule, Crossing. Returns the first failure or nullopt when the
/// matching is proper.
std::optional<Violation> validate_matching(const Necklace& necklace, const Matching& matching);

/// Chords (a,b) and (c,d) on a circle interleave. Chords sharing an
/// endpoint never cross.
constexpr bool chords_cross(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                            std::uint64_t d) noexcept {
  if (a == c || a == d || b == c || b == d) return false;
  if (a > b) std::swap(a, b);
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c_in != d_in;
}

/// Cross-free test by nesting after cutting the circle at `cut`.
/// Returns the offending pair indices of the first crossing found.
std::optional<std::pair<std::size_t, std::size_t>> find_crossing_nested(
    std::uint64_t n, std::uint64_t cut, const std::vector<BeadPair>& pairs);

/// Quadratic pairwise chord-interleaving test.
std::optional<std::pair<std::size_t, std::size_t>> find_crossing_pairwise(
    const std::vector<BeadPair>& pairs);

}  // namespace necklace

#endif  // NECKLACE_CORE_HPP
