#pragma once

#include <optional>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// Pineapple on q+p vertices: a q-clique with p pendant vertices all attached
// to clique vertex 0. The extremal block graph with independence number
// alpha is the pineapple with q = n-alpha+1, p = alpha-1.
Graph pineapple_qp(int q, int p);

// Pineapple on n vertices with independence number alpha (1 <= alpha <= n-1;
// alpha = 1 yields K_n, alpha = n-1 the star).
Graph pineapple(int n, int alpha);

// Split graph S_{k,n-k}: a k-clique complete to an independent set of n-k
// vertices. Clique vertices are 0..k-1. Requires 1 <= k <= n.
Graph s_knk(int n, int k);

// Witness that a graph is a k-tree: the vertices in construction order
// after the initial K_k, each with its k-clique attachment set.
struct KTreeCertificate {
    int k = 0;
    std::vector<int> base;                    // the initial clique
    std::vector<int> order;                   // added vertices, in order
    std::vector<std::vector<int>> attachments;  // parallel to order
};

// Accepts iff g is a k-tree; works by repeatedly deleting a simplicial
// vertex of degree exactly k until K_k remains.
std::optional<KTreeCertificate> recognize_ktree(const Graph& g, int k);

// Replays a certificate; true iff it reconstructs g exactly.
bool replay_ktree_certificate(const Graph& g, const KTreeCertificate& cert);

// Pendant/twin pruning recognizer. Throws on disconnected input.
bool recognize_distance_hereditary(const Graph& g);

// Accepts iff every block induces a complete graph. Throws on disconnected
// input.
bool recognize_block_graph(const Graph& g);

bool is_tree(const Graph& g);

}  // namespace specgraph
