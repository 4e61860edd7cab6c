#include "wiener/graph6.hpp"

#include <cstdint>

namespace wiener {

namespace {

constexpr const char* kOptionalPrefix = ">>graph6<<";

int payload_chars(int n) { return (n * (n - 1) / 2 + 5) / 6; }

}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(char(63 + n));
  } else {
    out.push_back('~');
    out.push_back(char(63 + (n >> 12 & 63)));
    out.push_back(char(63 + (n >> 6 & 63)));
    out.push_back(char(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(char(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) out.push_back(char(63 + (acc << (6 - nbits))));
  return out;
}

Graph graph6_decode(const std::string& line) {
  using Kind = Graph6Error::Kind;
  std::size_t pos = 0;
  if (line.rfind(kOptionalPrefix, 0) == 0) pos = std::char_traits<char>::length(kOptionalPrefix);
  if (pos >= line.size()) throw Graph6Error(Kind::kEmpty, "empty graph6 line");

  auto val = [&](std::size_t i) -> int {
    unsigned char c = line[i];
    if (c < 63 || c > 126)
      throw Graph6Error(Kind::kBadChar, "invalid graph6 byte at column " +
                                            std::to_string(i + 1));
    return c - 63;
  };

  long n;
  if (line[pos] == '~') {
    if (line.size() < pos + 4)
      throw Graph6Error(Kind::kBadHeader, "truncated extended header");
    if (line[pos + 1] == '~')
      throw Graph6Error(Kind::kBadHeader, "36-bit orders not supported");
    n = long(val(pos + 1)) << 12 | long(val(pos + 2)) << 6 | val(pos + 3);
    pos += 4;
  } else {
    n = val(pos);
    pos += 1;
  }
  if (n < 1 || n > Graph::kMaxOrder)
    throw Graph6Error(Kind::kOrderOutOfRange,
                      "graph order " + std::to_string(n) + " outside [1, 64]");

  int need = payload_chars(int(n));
  if (long(line.size() - pos) < need)
    throw Graph6Error(Kind::kTruncated, "payload too short: need " +
                                            std::to_string(need) + " bytes, have " +
                                            std::to_string(line.size() - pos));
  if (long(line.size() - pos) > need)
    throw Graph6Error(Kind::kTrailingGarbage,
                      "trailing bytes after graph6 payload");

  std::uint64_t rows[Graph::kMaxOrder] = {};
  int bit = 0;
  int total = int(n) * (int(n) - 1) / 2;
  for (int c = 0; c < need; ++c) {
    int v = val(pos + c);
    for (int b = 5; b >= 0; --b, ++bit) {
      int on = v >> b & 1;
      if (bit >= total) {
        if (on) throw Graph6Error(Kind::kPadding, "nonzero padding bits");
        continue;
      }
      if (on) {
        // bit index -> pair (i, j), column-major upper triangle
        int j = 1;
        int t = bit;
        while (t >= j) t -= j, ++j;
        int i = t;
        rows[i] |= 1ull << j;
        rows[j] |= 1ull << i;
      }
    }
  }
  return Graph::from_rows(int(n), rows);
}

}  // namespace wiener
