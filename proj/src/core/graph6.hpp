#pragma once

#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace mostar {

// Standard graph6 line (without trailing newline). Bit-exact: the upper
// triangle is packed column by column into 6-bit groups offset by 63.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" prefix and both the short and the
// extended ("~"-escaped) order headers. Rejects out-of-range bytes,
// truncation, trailing data, and nonzero padding bits; ParseError carries
// the byte offset into the given line.
Graph graph6_decode(std::string_view line);

}  // namespace mostar
