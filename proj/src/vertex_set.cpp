#include "edgering/vertex_set.hpp"

#include "edgering/errors.hpp"

namespace edgering {

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::vector<int> VertexSet::labels() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v + 1); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) s += ',';
    s += std::to_string(v + 1);
    first = false;
  });
  s += '}';
  return s;
}

bool lex_less(VertexSet a, VertexSet b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  // A proper prefix sorts first.
  return x == 0 && y != 0;
}

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformed: return "malformed input";
    case ParseErrorKind::kLoop: return "loop";
    case ParseErrorKind::kDuplicateEdge: return "duplicate edge";
    case ParseErrorKind::kVertexOutOfRange: return "vertex out of range";
    case ParseErrorKind::kTooManyVertices: return "too many vertices";
    case ParseErrorKind::kInvalidGraph6Byte: return "invalid graph6 byte";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + edgering::to_string(kind) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      line_(line) {}

}  // namespace edgering
