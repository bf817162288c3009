#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgering {

enum class ParseErrorKind {
  kMalformed,
  kLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kTooManyVertices,
  kInvalidGraph6Byte,
};

const char* to_string(ParseErrorKind kind);

/// Raised by the edge-list and graph6 readers. `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// The graph is valid but outside what an operation accepts (disconnected,
/// bipartite where an odd cycle is required).
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical identity that must hold failed to hold. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace edgering
