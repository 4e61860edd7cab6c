#pragma once
// graph6 text format: one graph per line, 6-bit groups of the column-major
// upper triangle, each offset by 63. Orders 1..62 use a single header byte,
// 63..64 the '~'-escaped 18-bit header.

#include <string>

#include "wiener/graph.hpp"

namespace wiener {

struct Graph6Error : GraphError {
  enum class Kind {
    kEmpty,
    kBadHeader,
    kBadChar,
    kTruncated,
    kTrailingGarbage,
    kOrderOutOfRange,
    kPadding,
  };

  Graph6Error(Kind k, const std::string& msg) : GraphError(msg), kind(k) {}

  Kind kind;
  int line = 0;  // 1-based, filled in by stream readers
};

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);

}  // namespace wiener
