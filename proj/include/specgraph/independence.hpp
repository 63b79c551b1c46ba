#pragma once

#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// Exact independence number by branch and bound with greedy clique-cover
// pruning. Supported up to n = 24.
int independence_number_bruteforce(const Graph& g);

// One maximum independent set, from the same search.
std::vector<int> maximum_independent_set(const Graph& g);

// Which leaf block the block-graph recursion peels first.
enum class LeafChoice { Forward, Reversed };

// Exact independence number of a connected block graph by repeatedly
// deleting a leaf block and counting one vertex per deleted block. The
// leaf choice is immaterial to the result.
int independence_number_blockgraph(const Graph& g, LeafChoice choice = LeafChoice::Forward);

}  // namespace specgraph
