#ifndef TURAN_GRAPH6_HPP
#define TURAN_GRAPH6_HPP

#include <string>

#include "turan/graph.hpp"

namespace turan {

/// Standard graph6 text encoding (upper-triangle bits, column order,
/// 6 bits per printable character offset by 63).
std::string graph6_encode(const Graph& g);

/// Inverse of graph6_encode. Throws std::invalid_argument on a malformed
/// header, out-of-range characters, wrong length, or nonzero padding bits.
Graph graph6_decode(const std::string& text);

}  // namespace turan

#endif
