#include "pitchmomdp/pitch.hpp"

#include <cctype>
#include <sstream>

namespace pitchmomdp {

namespace {

constexpr char kLetters[kNumPitchClasses + 1] = "CDEFGAB";

struct Token {
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 0;
  bool in_comment = false;
  bool line_has_token = false;
  Token current{{}, 0, 0};

  auto flush = [&] {
    if (!current.text.empty()) {
      tokens.push_back(current);
      current.text.clear();
      line_has_token = true;
    }
  };

  for (char c : text) {
    ++column;
    if (c == '\n') {
      flush();
      ++line;
      column = 0;
      in_comment = false;
      line_has_token = false;
      continue;
    }
    if (in_comment) continue;
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
      continue;
    }
    if (c == '#' && !line_has_token && current.text.empty()) {
      in_comment = true;
      continue;
    }
    if (current.text.empty()) {
      current.line = line;
      current.column = column;
    }
    current.text.push_back(c);
  }
  flush();
  return tokens;
}

IntervalNumber parse_interval_token(const Token& token) {
  int value = 0;
  for (char c : token.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(token.line, token.column,
                       "expected an interval number, got '" + token.text + "'");
    }
    value = value * 10 + (c - '0');
    if (value > kNumPitchClasses) break;
  }
  if (value < 1 || value > kNumPitchClasses) {
    throw ParseError(token.line, token.column,
                     "interval '" + token.text + "' outside 1..7");
  }
  return IntervalNumber(value);
}

PitchClass parse_pitch_token(const Token& token, std::string_view text) {
  if (text.size() != 1) {
    throw ParseError(token.line, token.column,
                     "expected a pitch letter, got '" + token.text + "'");
  }
  const char c = static_cast<char>(
      std::toupper(static_cast<unsigned char>(text.front())));
  for (int i = 0; i < kNumPitchClasses; ++i) {
    if (kLetters[i] == c) return PitchClass(i);
  }
  throw ParseError(token.line, token.column,
                   std::string("'") + text.front() + "' is not a natural pitch");
}

}  // namespace

PitchClass PitchClass::from_letter(char letter) {
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
  for (int i = 0; i < kNumPitchClasses; ++i) {
    if (kLetters[i] == c) return PitchClass(i);
  }
  throw std::invalid_argument(std::string("'") + letter +
                              "' is not a natural pitch letter");
}

char PitchClass::letter() const { return kLetters[index_]; }

PitchClass advance(PitchClass p, IntervalNumber k) {
  return PitchClass((p.index() + k.number() - 1) % kNumPitchClasses);
}

IntervalNumber compose(IntervalNumber i, IntervalNumber j) {
  return IntervalNumber((i.number() - 1 + j.number() - 1) % kNumPitchClasses + 1);
}

IntervalNumber interval_between(PitchClass p, PitchClass q) {
  return IntervalNumber(
      (q.index() - p.index() + kNumPitchClasses) % kNumPitchClasses + 1);
}

std::vector<Decomposition> decompositions(IntervalNumber k) {
  std::vector<Decomposition> result;
  result.reserve(static_cast<std::size_t>(k.number()));
  for (int i = 1; i <= k.number(); ++i) {
    result.push_back({IntervalNumber(i), IntervalNumber(k.number() + 1 - i)});
  }
  return result;
}

std::vector<PitchClass> Contour::pitches() const {
  std::vector<PitchClass> result;
  result.reserve(commands.size() + 1);
  result.push_back(start);
  for (IntervalNumber k : commands) {
    result.push_back(advance(result.back(), k));
  }
  return result;
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Contour parse_contour(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) {
    throw ParseError(1, 1, "empty contour");
  }

  // Intervals form: "C: 3 2 6" (the colon may be attached or stand alone).
  const Token& head = tokens.front();
  bool intervals_form = false;
  std::string_view start_text = head.text;
  std::size_t first_command = 1;
  if (head.text.size() == 2 && head.text.back() == ':') {
    intervals_form = true;
    start_text = std::string_view(head.text).substr(0, 1);
  } else if (tokens.size() > 1 && tokens[1].text == ":") {
    intervals_form = true;
    first_command = 2;
  }

  if (intervals_form) {
    Contour contour{parse_pitch_token(head, start_text), {}};
    for (std::size_t i = first_command; i < tokens.size(); ++i) {
      contour.commands.push_back(parse_interval_token(tokens[i]));
    }
    if (contour.commands.empty()) {
      throw ParseError(head.line, head.column, "contour has no commands");
    }
    return contour;
  }

  // Notes form: successive pitch letters.
  if (tokens.size() < 2) {
    throw ParseError(head.line, head.column,
                     "a notes-form contour needs at least two pitches");
  }
  Contour contour{parse_pitch_token(head, head.text), {}};
  PitchClass previous = contour.start;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const PitchClass next = parse_pitch_token(tokens[i], tokens[i].text);
    contour.commands.push_back(interval_between(previous, next));
    previous = next;
  }
  return contour;
}

std::string format_contour(const Contour& contour) {
  std::ostringstream out;
  out << contour.start.letter() << ':';
  for (IntervalNumber k : contour.commands) out << ' ' << k.number();
  out << '\n';
  return out.str();
}

}  // namespace pitchmomdp
