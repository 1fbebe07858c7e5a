#ifndef PITCHMOMDP_PITCH_HPP
#define PITCHMOMDP_PITCH_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Diatonic pitch and interval arithmetic: the seven natural pitch classes,
// interval numbers 1st..7th, interval composition, decomposition enumeration
// and contour parsing. All value types here are immutable and all operations
// are pure functions.

namespace pitchmomdp {

inline constexpr int kNumPitchClasses = 7;

/// A natural pitch class C, D, E, F, G, A or B, octave-free.
class PitchClass {
 public:
  constexpr explicit PitchClass(int index) : index_(index) {
    if (index < 0 || index >= kNumPitchClasses) {
      throw std::out_of_range("pitch class index outside 0..6");
    }
  }

  /// Accepts 'C'..'B' in either case; throws std::invalid_argument otherwise.
  static PitchClass from_letter(char letter);

  constexpr int index() const { return index_; }
  char letter() const;

  auto operator<=>(const PitchClass&) const = default;

 private:
  int index_;
};

/// A diatonic interval size: 1 (unison) through 7 (seventh).
class IntervalNumber {
 public:
  constexpr explicit IntervalNumber(int number) : number_(number) {
    if (number < 1 || number > kNumPitchClasses) {
      throw std::out_of_range("interval number outside 1..7");
    }
  }

  constexpr int number() const { return number_; }

  auto operator<=>(const IntervalNumber&) const = default;

 private:
  int number_;
};

/// An action: an ordered pair of sub-intervals realizing a commanded
/// interval k, with first + second = k + 1 (non-wrapping split).
struct Decomposition {
  IntervalNumber first;
  IntervalNumber second;
  bool operator==(const Decomposition&) const = default;
};

/// Moves p up by interval k, wrapping at the octave: (p + k - 1) mod 7.
PitchClass advance(PitchClass p, IntervalNumber k);

/// Interval composition: advancing by i then j equals advancing by
/// compose(i, j) from any pitch.
IntervalNumber compose(IntervalNumber i, IntervalNumber j);

/// The ascending interval from p to q; advance(p, interval_between(p, q)) == q.
IntervalNumber interval_between(PitchClass p, PitchClass q);

/// All two-part non-wrapping splits of k: {(i, k+1-i) : i = 1..k}, ascending
/// in the first leg. The list has exactly k entries.
std::vector<Decomposition> decompositions(IntervalNumber k);

/// A training pattern: a start pitch plus the sequence of commanded
/// intervals. The derived pitch sequence is p_0..p_m with
/// p_t = advance(p_{t-1}, commands[t-1]).
struct Contour {
  PitchClass start;
  std::vector<IntervalNumber> commands;

  std::vector<PitchClass> pitches() const;
  int length() const { return static_cast<int>(commands.size()); }
  bool operator==(const Contour&) const = default;
};

/// Contour parse failure, carrying the 1-based position of the offending
/// token.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses a contour in either form:
///   notes form      "C E F D"   -> start C, commands from successive pairs
///   intervals form  "C: 3 2 6"  -> start C, commands as written
/// Lines whose first non-blank character is '#' are ignored. A contour needs
/// at least one command; violations throw ParseError with line/column.
Contour parse_contour(std::string_view text);

/// Canonical intervals-form rendering; parse_contour(format_contour(c)) == c.
std::string format_contour(const Contour& contour);

}  // namespace pitchmomdp

#endif  // PITCHMOMDP_PITCH_HPP
