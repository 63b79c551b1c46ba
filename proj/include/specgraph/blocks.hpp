#pragma once

#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// Block/cut-vertex decomposition of a connected graph. Blocks are maximal
// 2-connected subgraphs, bridges, or (for K1 only) a single vertex. Leaf
// blocks contain exactly one cut vertex; a graph that is a single block has
// no leaf blocks.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // sorted vertex sets
    std::vector<int> cut_vertices;         // sorted
    std::vector<bool> is_cut;              // indexed by vertex
    std::vector<int> leaf_blocks;          // indices into blocks
    std::vector<int> simplicial_vertices;  // every v with N(v) a clique
    std::vector<int> leaf_simplicials;     // simplicial vertices lying in leaf blocks
};

// Throws std::invalid_argument on disconnected input.
BlockDecomposition decompose_blocks(const Graph& g);

}  // namespace specgraph
