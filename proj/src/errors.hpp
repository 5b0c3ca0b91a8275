#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmv {

/// Operands built over different shapes.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Generator, minor, or index set outside the ambient shape.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed DSL input; carries the byte offset of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A request the verifier has no computation for (unknown suite, n = 2
/// obstruction, and similar).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qmv
