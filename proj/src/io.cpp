#include "fence/io.hpp"

#include <sstream>
#include <vector>

namespace fence {

namespace {

struct Line {
  int number = 0;
  std::string text;
};

// Comments and blank lines removed, with original line numbers kept.
std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string::size_type hash = raw.find('#');
    if (hash != std::string::npos) {
      raw.erase(hash);
    }
    std::string::size_type first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    std::string::size_type last = raw.find_last_not_of(" \t\r");
    out.push_back({number, raw.substr(first, last - first + 1)});
  }
  return out;
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    tokens.push_back(token);
  }
  return tokens;
}

int parse_int(const std::string& token, int line, const std::string& what) {
  std::size_t consumed = 0;
  int value = 0;
  try {
    value = std::stoi(token, &consumed);
  } catch (const std::exception&) {
    throw ParseError(line, 1, "expected integer for " + what + ", got '" + token + "'");
  }
  if (consumed != token.size()) {
    throw ParseError(line, 1, "trailing characters in " + what + " '" + token + "'");
  }
  return value;
}

}  // namespace

FenceDiagram parse_fence(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.size() < 3) {
    throw ParseError(lines.empty() ? 1 : lines.back().number, 1,
                     "expected header, strands and bands lines");
  }
  if (lines[0].text != "fence 1") {
    throw ParseError(lines[0].number, 1, "expected 'fence 1' header");
  }
  std::vector<std::string> strand_tokens = split_tokens(lines[1].text);
  if (strand_tokens.size() != 2 || strand_tokens[0] != "strands") {
    throw ParseError(lines[1].number, 1, "expected 'strands <b>'");
  }
  int strands = parse_int(strand_tokens[1], lines[1].number, "strand count");
  if (strands < 1) {
    throw RangeError(lines[1].number, "strand count must be positive");
  }

  std::vector<std::string> band_tokens = split_tokens(lines[2].text);
  if (band_tokens.empty() || band_tokens[0] != "bands") {
    throw ParseError(lines[2].number, 1, "expected 'bands ...'");
  }
  if (lines.size() > 3) {
    throw ParseError(lines[3].number, 1, "unexpected extra line");
  }

  FenceDiagram f;
  f.strands = strands;
  for (std::size_t i = 1; i < band_tokens.size(); ++i) {
    const std::string& token = band_tokens[i];
    std::string::size_type dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size()) {
      throw ParseError(lines[2].number, 1, "expected band '<i>-<j>', got '" + token + "'");
    }
    int top = parse_int(token.substr(0, dash), lines[2].number, "band index");
    int bottom = parse_int(token.substr(dash + 1), lines[2].number, "band index");
    if (top >= bottom) {
      throw RangeError(lines[2].number,
                       "band '" + token + "' must satisfy i < j");
    }
    if (bottom > strands) {
      throw RangeError(lines[2].number,
                       "band '" + token + "' exceeds strand count " +
                           std::to_string(strands));
    }
    if (top < 1) {
      throw RangeError(lines[2].number, "band '" + token + "' has index below 1");
    }
    f.word.push_back({top, bottom});
  }
  return f;
}

std::string serialize_fence(const FenceDiagram& f) {
  std::ostringstream out;
  out << "fence 1\n";
  out << "strands " << f.strands << "\n";
  out << "bands";
  for (const Band& band : f.word) {
    out << " " << band.top << "-" << band.bottom;
  }
  out << "\n";
  return out.str();
}

RectilinearFront parse_front(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.size() < 2) {
    throw ParseError(lines.empty() ? 1 : lines.back().number, 1,
                     "expected header and segments lines");
  }
  if (lines[0].text != "front 1") {
    throw ParseError(lines[0].number, 1, "expected 'front 1' header");
  }
  if (lines[1].text != "segments") {
    throw ParseError(lines[1].number, 1, "expected 'segments'");
  }
  RectilinearFront front;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    std::vector<std::string> tokens = split_tokens(lines[i].text);
    if (tokens.size() != 4 || (tokens[0] != "H" && tokens[0] != "V")) {
      throw ParseError(lines[i].number, 1, "expected 'H <y> <x1> <x2>' or 'V <x> <y1> <y2>'");
    }
    FrontSegment seg;
    seg.horizontal = tokens[0] == "H";
    seg.fixed = parse_int(tokens[1], lines[i].number, "coordinate");
    seg.from = parse_int(tokens[2], lines[i].number, "coordinate");
    seg.to = parse_int(tokens[3], lines[i].number, "coordinate");
    front.segments.push_back(seg);
  }
  return front;
}

std::string serialize_front(const RectilinearFront& front) {
  std::ostringstream out;
  out << "front 1\n";
  out << "segments\n";
  for (const FrontSegment& seg : front.segments) {
    out << (seg.horizontal ? "H " : "V ") << seg.fixed << " " << seg.from << " "
        << seg.to << "\n";
  }
  return out.str();
}

}  // namespace fence
