#include "minorclass/graph6.hpp"

#include <stdexcept>

namespace minorclass {

// graph6: N(n) followed by the upper triangle, column by column ((0,1),
// (0,2), (1,2), (0,3), ...), packed big-endian into 6-bit groups, each
// printed as its value plus 63.

std::string graph6_encode(const LabelledGraph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw std::invalid_argument("graph too large for this encoder");
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

LabelledGraph graph6_decode(const std::string& s) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) throw std::invalid_argument("truncated graph6 string");
    int v = static_cast<unsigned char>(s[pos++]) - 63;
    if (v < 0 || v > 63) throw std::invalid_argument("bad graph6 character");
    return v;
  };
  int first = next();
  long n;
  if (first == 63) {  // '~'
    long a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = first;
  }
  LabelledGraph g(static_cast<int>(n));
  int acc = 0, left = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (left == 0) {
        acc = next();
        left = 6;
      }
      if ((acc >> (left - 1)) & 1) g.add_edge(i, j);
      --left;
    }
  }
  return g;
}

}  // namespace minorclass
