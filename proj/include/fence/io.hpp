#pragma once

#include <stdexcept>
#include <string>

#include "fence/core.hpp"
#include "fence/legendrian.hpp"

namespace fence {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class RangeError : public std::runtime_error {
 public:
  RangeError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Line-based format; '#' starts a comment, blank lines are ignored:
//   fence 1
//   strands <b>
//   bands <i>-<j> ...
FenceDiagram parse_fence(const std::string& text);
std::string serialize_fence(const FenceDiagram& f);

// Mirrors the fence format:
//   front 1
//   segments
//   H <y> <x1> <x2>
//   V <x> <y1> <y2>
// listed in traversal order around the closed curve.
RectilinearFront parse_front(const std::string& text);
std::string serialize_front(const RectilinearFront& front);

}  // namespace fence
