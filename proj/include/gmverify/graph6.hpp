#pragma once

#include <string>
#include <string_view>

#include "gmverify/graph.hpp"

namespace gmv {

/// Parses one graph6 record (optional ">>graph6<<" prefix and trailing line
/// terminators tolerated). Bytes must lie in [63,126]; padding bits must be
/// zero. Errors carry the byte offset into the record.
Graph parse_graph6(std::string_view record);

/// Canonical graph6 encoding: length header, then the upper triangle read
/// column-major, six bits per byte, MSB first, zero-padded, each byte + 63.
std::string to_graph6(const Graph& g);

}  // namespace gmv
