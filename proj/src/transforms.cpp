#include "specgraph/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace specgraph {

namespace {

constexpr double kTieTol = 1e-9;

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument(std::string("transform: ") + what + " out of range");
}

}  // namespace

RewireResult add_edge(const Graph& g, int u, int v) {
    check_vertex(g, u, "endpoint");
    check_vertex(g, v, "endpoint");
    RewireResult out{g.with_edge(u, v), {}};
    out.plan.variant = RewireVariant::AddEdge;
    out.plan.added = {{std::min(u, v), std::max(u, v)}};
    out.plan.strict = true;  // unconditional for edge addition
    return out;
}

RewireResult rowlinson_move(const Graph& g, const SpectralData& sd, int u, int v,
                            const std::vector<int>& targets) {
    check_vertex(g, u, "u");
    check_vertex(g, v, "v");
    if (u == v) throw std::invalid_argument("rowlinson_move: u and v must differ");
    if (sd.x.size() != g.vertex_count())
        throw std::invalid_argument("rowlinson_move: spectral data does not match the graph");
    if (targets.empty()) throw std::invalid_argument("rowlinson_move: empty target set");
    std::set<int> seen;
    for (int t : targets) {
        check_vertex(g, t, "target");
        if (t == u || t == v) throw std::invalid_argument("rowlinson_move: target equals u or v");
        if (!seen.insert(t).second) throw std::invalid_argument("rowlinson_move: duplicate target");
        if (!g.adjacent(u, t)) throw std::invalid_argument("rowlinson_move: target not in N(u)");
        if (g.adjacent(v, t)) throw std::invalid_argument("rowlinson_move: target already in N(v)");
    }
    if (sd.x(u) > sd.x(v) + kTieTol)
        throw std::invalid_argument("rowlinson_move: requires x_u <= x_v");

    EdgeList removed, added;
    for (int t : targets) {
        removed.emplace_back(std::min(u, t), std::max(u, t));
        added.emplace_back(std::min(v, t), std::max(v, t));
    }
    Graph result = g.rewired(removed, added);
    if (!is_connected(result)) throw std::invalid_argument("rowlinson_move: result is disconnected");

    RewireResult out{std::move(result), {}};
    out.plan.variant = RewireVariant::Rowlinson;
    out.plan.removed = std::move(removed);
    out.plan.added = std::move(added);
    out.plan.witness.sources = {u};
    out.plan.witness.sinks = {v};
    out.plan.witness.w_set = targets;
    out.plan.witness.source_sum = sd.x(u);
    out.plan.witness.sink_sum = sd.x(v);
    out.plan.strict = sd.x(v) - sd.x(u) >= kTieTol;
    return out;
}

RewireResult block_swap(const Graph& g, const SpectralData& sd, const std::vector<int>& sources,
                        const std::vector<int>& sinks, const std::vector<int>& w_set) {
    if (sd.x.size() != g.vertex_count())
        throw std::invalid_argument("block_swap: spectral data does not match the graph");
    if (sources.empty()) throw std::invalid_argument("block_swap: empty source set");
    if (sinks.empty()) throw std::invalid_argument("block_swap: empty sink set");
    if (w_set.empty()) throw std::invalid_argument("block_swap: empty W");

    std::set<int> src(sources.begin(), sources.end());
    std::set<int> snk(sinks.begin(), sinks.end());
    std::set<int> w(w_set.begin(), w_set.end());
    if (src.size() != sources.size() || snk.size() != sinks.size() || w.size() != w_set.size())
        throw std::invalid_argument("block_swap: duplicate vertices in a set");
    for (int x : sources) check_vertex(g, x, "source");
    for (int x : sinks) check_vertex(g, x, "sink");
    for (int x : w_set) check_vertex(g, x, "W vertex");
    for (int x : sources)
        if (snk.count(x)) throw std::invalid_argument("block_swap: source and sink sets overlap");
    for (int x : w_set)
        if (src.count(x) || snk.count(x))
            throw std::invalid_argument("block_swap: W overlaps the endpoint sets");

    for (int s : sources)
        for (int x : w_set)
            if (!g.adjacent(s, x))
                throw std::invalid_argument("block_swap: sources must be complete to W");
    for (int t : sinks)
        for (int x : w_set)
            if (g.adjacent(t, x))
                throw std::invalid_argument("block_swap: sinks must be anticomplete to W");

    double source_sum = 0.0, sink_sum = 0.0;
    for (int s : sources) source_sum += sd.x(s);
    for (int t : sinks) sink_sum += sd.x(t);
    if (source_sum > sink_sum + kTieTol)
        throw std::invalid_argument("block_swap: requires source sum <= sink sum");

    EdgeList removed, added;
    for (int x : w_set) {
        for (int s : sources) removed.emplace_back(std::min(s, x), std::max(s, x));
        for (int t : sinks) added.emplace_back(std::min(t, x), std::max(t, x));
    }
    Graph result = g.rewired(removed, added);
    if (!is_connected(result)) throw std::invalid_argument("block_swap: result is disconnected");

    RewireResult out{std::move(result), {}};
    out.plan.variant = RewireVariant::BlockSwap;
    out.plan.removed = std::move(removed);
    out.plan.added = std::move(added);
    out.plan.witness.sources = sources;
    out.plan.witness.sinks = sinks;
    out.plan.witness.w_set = w_set;
    out.plan.witness.source_sum = source_sum;
    out.plan.witness.sink_sum = sink_sum;
    out.plan.strict = sink_sum - source_sum >= kTieTol;
    return out;
}

}  // namespace specgraph
