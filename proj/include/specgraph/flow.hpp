#pragma once

#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// Maximum number of edge-disjoint u,v-paths = minimum u,v-disconnecting set
// (unit-capacity max flow over the bidirected network).
int local_edge_connectivity(const Graph& g, int u, int v);

// Global edge connectivity: min over all v != 0 of the 0,v flow value.
// Requires a connected graph on at least two vertices.
int edge_connectivity(const Graph& g);

// A maximum family of pairwise edge-disjoint u,v-paths, each given as a
// vertex sequence from u to v. Throws if u == v.
std::vector<std::vector<int>> edge_disjoint_paths(const Graph& g, int u, int v);

}  // namespace specgraph
