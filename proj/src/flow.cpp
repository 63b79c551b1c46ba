#include "specgraph/flow.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace specgraph {

namespace {

// residual[u][v] in {0,1,2}: each undirected edge contributes antiparallel
// unit arcs
using ResidualMatrix = std::vector<std::vector<int>>;

ResidualMatrix unit_residual(const Graph& g) {
    const int n = g.vertex_count();
    ResidualMatrix r(n, std::vector<int>(n, 0));
    for (const auto& [u, v] : g.edges()) {
        r[u][v] = 1;
        r[v][u] = 1;
    }
    return r;
}

// shortest augmenting paths until none remains
int augment_all(ResidualMatrix& r, int s, int t) {
    const int n = static_cast<int>(r.size());
    int flow = 0;
    while (true) {
        std::vector<int> pred(n, -1);
        std::queue<int> q;
        pred[s] = s;
        q.push(s);
        while (!q.empty() && pred[t] == -1) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (pred[v] == -1 && r[u][v] > 0) {
                    pred[v] = u;
                    q.push(v);
                }
        }
        if (pred[t] == -1) return flow;
        for (int v = t; v != s; v = pred[v]) {
            --r[pred[v]][v];
            ++r[v][pred[v]];
        }
        ++flow;
    }
}

}  // namespace

int local_edge_connectivity(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("local_edge_connectivity: u and v must differ");
    ResidualMatrix r = unit_residual(g);
    return augment_all(r, u, v);
}

int edge_connectivity(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("edge_connectivity: need at least two vertices");
    if (!is_connected(g)) throw std::invalid_argument("edge_connectivity: graph must be connected");
    int best = g.vertex_count();
    for (int v = 1; v < g.vertex_count(); ++v)
        best = std::min(best, local_edge_connectivity(g, 0, v));
    return best;
}

std::vector<std::vector<int>> edge_disjoint_paths(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("edge_disjoint_paths: u and v must differ");
    const int n = g.vertex_count();
    ResidualMatrix r = unit_residual(g);
    const int flow = augment_all(r, u, v);

    // arc carries flow iff its residual dropped below capacity
    std::vector<std::vector<int>> used(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.adjacent(a, b) && r[a][b] == 0) used[a][b] = 1;
    // cancel antiparallel flow so each undirected edge is used at most once
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (used[a][b] && used[b][a]) used[a][b] = used[b][a] = 0;

    std::vector<std::vector<int>> paths;
    for (int p = 0; p < flow; ++p) {
        std::vector<int> path{u};
        std::vector<int> pos(n, -1);
        pos[u] = 0;
        while (path.back() != v) {
            int cur = path.back();
            int next = -1;
            for (int b = 0; b < n; ++b)
                if (used[cur][b]) {
                    next = b;
                    break;
                }
            if (next == -1) throw std::runtime_error("edge_disjoint_paths: decomposition failed");
            used[cur][next] = 0;
            if (pos[next] != -1) {
                // erase the cycle just closed
                for (std::size_t i = pos[next] + 1; i < path.size(); ++i) pos[path[i]] = -1;
                path.resize(pos[next] + 1);
            } else {
                pos[next] = static_cast<int>(path.size());
                path.push_back(next);
            }
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

}  // namespace specgraph
