#pragma once

#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/spectra.hpp"

namespace specgraph {

// The three radius-increasing rewirings. Each validates its structural
// preconditions individually and records the Perron-vector inequality that
// justifies the move. The caller supplies SpectralData so one eigensolve can
// serve many candidate moves.

enum class RewireVariant { AddEdge, Rowlinson, BlockSwap };

struct RewireWitness {
    std::vector<int> sources;  // vertices losing W-edges
    std::vector<int> sinks;    // vertices gaining W-edges
    std::vector<int> w_set;
    double source_sum = 0.0;
    double sink_sum = 0.0;
};

struct RewirePlan {
    RewireVariant variant = RewireVariant::AddEdge;
    EdgeList removed;
    EdgeList added;
    RewireWitness witness;
    // false when the witness sums are within tolerance of a tie; strict
    // radius increase is then not certified
    bool strict = true;
};

struct RewireResult {
    Graph graph;
    RewirePlan plan;
};

// G + uv. Throws on loops or existing edges.
RewireResult add_edge(const Graph& g, int u, int v);

// Moves the edges u-t (t in targets) to v-t, for targets inside
// N(u) \ N(v), under x_u <= x_v. Result must stay connected.
RewireResult rowlinson_move(const Graph& g, const SpectralData& sd, int u, int v,
                            const std::vector<int>& targets);

// Rewires every W-source edge into a W-sink edge: sources must be complete
// to W, sinks anticomplete to W, and the source coordinate sum must not
// exceed the sink sum. Result must stay connected.
RewireResult block_swap(const Graph& g, const SpectralData& sd, const std::vector<int>& sources,
                        const std::vector<int>& sinks, const std::vector<int>& w_set);

}  // namespace specgraph
