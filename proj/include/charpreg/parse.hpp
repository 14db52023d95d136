#pragma once

#include <string>
#include <utility>
#include <vector>

#include "charpreg/ideal.hpp"

namespace charpreg {

// Result of reading an ideal file: one ring context and the named ideal
// blocks in declaration order.
struct ParsedFile {
  RingPtr ring;
  std::vector<std::pair<std::string, Ideal>> ideals;

  // Null when no block carries that name.
  const Ideal* find(const std::string& name) const;
};

// Grammar, one ring header then any number of ideal blocks:
//   ring p=<prime> vars=<id>,<id>,... order=<grevlex|lex|elim:<k>>
//   ideal <name> = <expr>, <expr>, ...
// Expressions use +, -, *, ^ with integer coefficients and declared
// variables; '*' is mandatory between factors. '#' starts a comment that
// runs to end of line. Malformed input raises ParseError with a location;
// an ideal block with no generators raises UsageError.
ParsedFile parse_ideal_file(const std::string& text);

// Parses a single polynomial expression in an existing ring context.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace charpreg
