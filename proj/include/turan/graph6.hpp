#pragma once

#include <string>
#include <string_view>

#include "turan/graph.hpp"

namespace turan {

/// Encode in graph6: N(n) followed by the upper-triangle adjacency bits in
/// column order (0,1),(0,2),(1,2),(0,3),..., six bits per byte (MSB first),
/// each byte offset by 63. Orders above 62 use the four-byte N(n) form.
std::string encode_graph6(const Graph& g);

/// Decode one graph6 value. The optional ">>graph6<<" header and trailing
/// CR/LF are tolerated; anything else malformed (byte outside 63..126,
/// truncated or overlong bit stream, order above Graph::max_vertices) throws
/// std::invalid_argument.
Graph decode_graph6(std::string_view text);

}  // namespace turan
