#pragma once

#include <string>

#include "specgraph/graph.hpp"

namespace specgraph {

// Standard graph6 format: printable-ASCII packing of the upper-triangular
// adjacency bits in column-major order, six bits per byte, offset 63.
std::string graph6_encode(const Graph& g);

// Throws std::invalid_argument on malformed input (bad length header,
// non-printable byte, nonzero trailing bits, wrong length).
Graph graph6_decode(const std::string& s);

}  // namespace specgraph
