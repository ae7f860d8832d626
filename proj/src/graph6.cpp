#include "turan/graph6.hpp"

#include <stdexcept>

namespace turan {

namespace {

void append_sextets(std::string& out, const std::vector<int>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      v <<= 1;
      if (i + j < bits.size() && bits[i + j]) v |= 1;
    }
    out.push_back(static_cast<char>(v + 63));
  }
}

int sextet(char c) {
  if (c < 63 || c > 126) {
    throw std::invalid_argument("graph6: character out of range");
  }
  return c - 63;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // Long form: '~' then 18 bits of n, big-endian sextets.
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  std::vector<int> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) bits.push_back(g.has_edge(row, col) ? 1 : 0);
  }
  append_sextets(out, bits);
  return out;
}

Graph graph6_decode(const std::string& text) {
  std::size_t pos = 0;
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  int n;
  if (text[0] == 126) {
    if (text.size() >= 2 && text[1] == 126) {
      throw std::invalid_argument("graph6: order beyond 2^18 not supported");
    }
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated long-form header");
    n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    pos = 4;
  } else {
    n = sextet(text[0]);
    pos = 1;
  }
  if (n > Graph::kMaxOrder) {
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " exceeds 128");
  }
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nchars = (nbits + 5) / 6;
  if (text.size() - pos != nchars) {
    throw std::invalid_argument("graph6: body length mismatch");
  }
  Graph g(n);
  std::size_t bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      int v = sextet(text[pos + bit / 6]);
      if ((v >> (5 - bit % 6)) & 1) g.add_edge(row, col);
    }
  }
  // Padding bits must be zero.
  for (std::size_t b = nbits; b < nchars * 6; ++b) {
    int v = sextet(text[pos + b / 6]);
    if ((v >> (5 - b % 6)) & 1) {
      throw std::invalid_argument("graph6: nonzero padding bits");
    }
  }
  return g;
}

}  // namespace turan
