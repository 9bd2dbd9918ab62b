// Element grammar: `<bits>;<cycles>` where <bits> is a_1..a_n over {0,1} and
// <cycles> is a product of disjoint cycles in 1-based positions, e.g.
// `10001;(1 2 3)(4 5)`, or `id` for the identity permutation.
// parse_element(print_element(x)) == x for every element.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "weylrack/group.hpp"

namespace weylrack {

class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& what)
      : Error("parse error at column " + std::to_string(column + 1) + ": " + what),
        column_(column) {}

  // 0-based offset into the input string.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Canonical form: fixed points omitted, each cycle rotated least-first,
// cycles ordered by least entry.
std::string print_element(const SignedElem& x);
SignedElem parse_element(std::string_view text);

// The canonical comparison key of an element is its printed form; classes and
// deterministic iteration orders sort by it.
inline std::string canonical_key(const SignedElem& x) { return print_element(x); }

}  // namespace weylrack
