#pragma once

// Expression language for elements of O_q(M_{m,n}) and its localization:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' ['-'] int)?
//   atom   := 'q' | int | 'X[' i ',' j ']' | 'Xp[' i ',' j ']'
//           | 'M[' set '|' set ']' | 'Mp[' set '|' set ']'
//           | 'A(' i ',' j ')@' k | 'Dq@' k | 'inv1n' | '(' expr ')'
//   set    := '{' i (',' i)* '}'
//
// Products keep their order. Negative powers are accepted on q and inv1n
// only. A(i,j)@k and Dq@k refer to the leading k x k block.

#include "localize.hpp"
#include "minors.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qmv::dsl {

struct Node {
  enum class Kind {
    integer, q, generator, primed_generator, minor, primed_minor, complement, determinant, inverse_corner,
    negate, sum, difference, product, power,
  };
  Kind kind = Kind::integer;
  std::size_t position = 0;
  BigInt value;             // integer
  int row = 0, col = 0;     // generators, complement
  int block = 0;            // complement, determinant
  MinorSpec spec;           // minors
  int exponent = 0;         // power
  std::vector<std::unique_ptr<Node>> children;
};

using Ast = std::unique_ptr<Node>;

/// Throws ParseError (with the byte offset) on lexical, syntax, and index
/// errors; indices are checked against the shape.
Ast parse(std::string_view source, const Shape& shape);

/// Canonical localized value of a parsed expression.
Localized evaluate(const Node& node, const Shape& shape);
Localized evaluate(std::string_view source, const Shape& shape);

/// Fully parenthesized source text of an AST; parses back to the same tree.
std::string to_source(const Node& node);

}  // namespace qmv::dsl
