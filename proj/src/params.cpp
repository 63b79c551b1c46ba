#include "specgraph/params.hpp"

#include <algorithm>
#include <stdexcept>

#include "specgraph/families.hpp"
#include "specgraph/flow.hpp"
#include "specgraph/independence.hpp"

namespace specgraph {

GraphParams compute_params(const Graph& g) {
    auto d = diameter(g);
    if (!d) throw std::invalid_argument("compute_params: graph must be connected");
    GraphParams p;
    p.n = g.vertex_count();
    p.m = g.edge_count();
    p.delta_max = g.max_degree();
    p.delta_min = g.min_degree();
    p.diameter = *d;
    p.edge_connectivity = p.n >= 2 ? edge_connectivity(g) : 0;
    p.independence_number = independence_number_bruteforce(g);
    p.is_regular = p.delta_max == p.delta_min;
    return p;
}

LeafBlockLedger leaf_block_ledger(const Graph& g) {
    if (!recognize_block_graph(g))
        throw std::invalid_argument("leaf_block_ledger: input is not a block graph");
    if (g.is_complete())
        throw std::invalid_argument("leaf_block_ledger: complete input has no leaf structure");

    const BlockDecomposition dec = decompose_blocks(g);

    LeafBlockLedger ledger;
    ledger.removed = dec.leaf_simplicials;
    std::vector<int> old_to_new;
    ledger.h = g.without_vertices(ledger.removed, &old_to_new);
    ledger.h_to_g.assign(ledger.h.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (old_to_new[v] != -1) ledger.h_to_g[old_to_new[v]] = v;

    std::vector<bool> simplicial(g.vertex_count(), false);
    for (int v : dec.simplicial_vertices) simplicial[v] = true;

    const BlockDecomposition hdec = decompose_blocks(ledger.h);
    std::vector<bool> h_leaf(hdec.blocks.size(), false);
    for (int b : hdec.leaf_blocks) h_leaf[b] = true;
    std::vector<bool> h_cut_in_g(g.vertex_count(), false);
    for (int v : hdec.cut_vertices) h_cut_in_g[ledger.h_to_g[v]] = true;

    for (std::size_t b = 0; b < hdec.blocks.size(); ++b) {
        LedgerRow row;
        for (int v : hdec.blocks[b]) row.block.push_back(ledger.h_to_g[v]);
        std::sort(row.block.begin(), row.block.end());

        // leaf blocks glued at a cut vertex of the pruned graph belong to
        // that vertex's own bookkeeping, not to this block's
        for (int lb : dec.leaf_blocks) {
            int shared_vertex = -1;
            int shared = 0;
            for (int v : dec.blocks[lb])
                if (std::binary_search(row.block.begin(), row.block.end(), v)) {
                    ++shared;
                    shared_vertex = v;
                }
            if (shared == 1 && !h_cut_in_g[shared_vertex]) {
                ++row.leaf_count;
                for (int v : dec.blocks[lb])
                    if (simplicial[v]) row.attached_leaves.push_back(v);
            }
        }
        std::sort(row.attached_leaves.begin(), row.attached_leaves.end());

        for (int v : row.block)
            if (simplicial[v]) row.has_simplicial = true;

        row.is_leaf_of_h = h_leaf[b];
        if (row.is_leaf_of_h) {
            for (int v : hdec.blocks[b])
                if (hdec.is_cut[v]) row.cut_vertex_in_h = ledger.h_to_g[v];
        }
        ledger.rows.push_back(std::move(row));
    }
    return ledger;
}

}  // namespace specgraph
