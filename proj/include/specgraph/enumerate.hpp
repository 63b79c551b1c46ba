#pragma once

#include <functional>

#include "specgraph/graph.hpp"

namespace specgraph {

enum class FamilyKind { AllConnected, Tree, KTree, Block, DistanceHereditary };

struct FamilySpec {
    FamilyKind kind = FamilyKind::AllConnected;
    int k = 1;  // clique size for KTree
};

// Return false to stop the stream early.
using GraphSink = std::function<bool(const Graph&)>;

// Attachment-loop direction; both orders must produce the same class set.
enum class EnumOrder { Forward, Reversed };

// Streams exactly one representative per isomorphism class, in a fixed
// deterministic order (sorted canonical forms). Caps: n <= 9 for
// all-connected and distance-hereditary, n <= 11 for tree/ktree/block.
void enumerate_family(int n, FamilySpec family, const GraphSink& sink,
                      EnumOrder order = EnumOrder::Forward);

// Convenience: collect the whole family.
std::vector<Graph> collect_family(int n, FamilySpec family,
                                  EnumOrder order = EnumOrder::Forward);

}  // namespace specgraph
