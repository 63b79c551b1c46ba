#pragma once

#include <vector>

#include "specgraph/blocks.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

// Every nonspectral quantity the bounds consume.
struct GraphParams {
    int n = 0;
    int m = 0;
    int delta_max = 0;
    int delta_min = 0;
    int diameter = 0;           // 0 for K1
    int edge_connectivity = 0;  // 0 for K1
    int independence_number = 0;
    bool is_regular = true;
};

// Throws std::invalid_argument on disconnected input.
GraphParams compute_params(const Graph& g);

// One row per block of H = G - (leaf-block simplicial vertices of G), with
// the leaf-block bookkeeping evaluated in G.
struct LedgerRow {
    std::vector<int> block;            // vertex set in G labels
    std::vector<int> attached_leaves;  // L(B): simplicial vertices of leaf
                                       // blocks glued to B away from cut
                                       // vertices of H
    int leaf_count = 0;                // how many such leaf blocks
    bool has_simplicial = false;       // B holds a simplicial vertex of G
    bool is_leaf_of_h = false;
    int cut_vertex_in_h = -1;          // G label; set when is_leaf_of_h
};

struct LeafBlockLedger {
    std::vector<int> removed;  // the pruned simplicial leaf-block vertices
    Graph h;                   // the pruned graph, relabeled 0..|h|-1
    std::vector<int> h_to_g;   // h labels back to G labels
    std::vector<LedgerRow> rows;
};

// Requires a connected, noncomplete block graph.
LeafBlockLedger leaf_block_ledger(const Graph& g);

}  // namespace specgraph
