#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "specgraph/graph.hpp"

namespace specgraph {

// Canonical form for graphs on up to 16 vertices: the lexicographically
// smallest upper-triangle adjacency bitstring (column-major, the graph6 bit
// order) over all vertex orderings compatible with an iterated-degree color
// refinement. Two graphs have equal forms iff they are isomorphic.
struct CanonicalForm {
    int n = 0;
    std::array<std::uint64_t, 2> bits{0, 0};

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& c) const {
        std::uint64_t h = c.bits[0] * 0x9e3779b97f4a7c15ULL;
        h ^= c.bits[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ (static_cast<std::uint64_t>(c.n) << 56));
    }
};

// Throws std::invalid_argument for graphs with more than 16 vertices.
CanonicalForm canonical_form(const Graph& g);

// Rebuild the canonical representative graph from its form.
Graph canonical_graph(const CanonicalForm& c);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace specgraph
