#pragma once

#include <stdexcept>
#include <string>

#include "sharply/finite_group.hpp"
#include "sharply/nearfield.hpp"

namespace sharply::io {

// Malformed input; what() already includes the 1-based line number.
struct ParseError : public std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

// Group files:
//   degree: <n>
//   gen: <n images, 0-based>
//   gen: ...
// Blank lines and lines starting with '#' are ignored when parsing; printing
// is canonical (no comments, single spaces). parse(print(G)) preserves the
// generator list; print(parse(text)) canonicalizes whitespace and comments.
std::string print_group(const FiniteGroup& G);
FiniteGroup parse_group(const std::string& text);

// Near-structure tables:
//   order: <n>
//   zero: <z>
//   one: <e>
//   add:
//   <n rows of n entries>
//   mul:
//   <n rows of n entries>
std::string print_table(const NearStructure& S);
NearStructure parse_table(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sharply::io
