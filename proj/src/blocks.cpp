#include "specgraph/blocks.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace specgraph {

BlockDecomposition decompose_blocks(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("decompose_blocks: graph must be connected");
    const int n = g.vertex_count();
    BlockDecomposition out;
    out.is_cut.assign(n, false);

    if (n == 1) {
        out.blocks.push_back({0});
        out.simplicial_vertices.push_back(0);
        return out;
    }

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> stack;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : g.neighbors(u)) {
            if (disc[v] == -1) {
                ++children;
                stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if ((parent != -1 && low[v] >= disc[u]) || (parent == -1 && children > 1))
                    out.is_cut[u] = true;
                if (low[v] >= disc[u]) {
                    // pop one block's worth of edges
                    std::set<int> verts;
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        verts.insert(e.first);
                        verts.insert(e.second);
                        if (e.first == u && e.second == v) break;
                    }
                    out.blocks.emplace_back(verts.begin(), verts.end());
                }
            } else if (v != parent && disc[v] < disc[u]) {
                stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    dfs(0, -1);

    for (int v = 0; v < n; ++v)
        if (out.is_cut[v]) out.cut_vertices.push_back(v);

    if (out.blocks.size() > 1) {
        for (std::size_t b = 0; b < out.blocks.size(); ++b) {
            int cuts = 0;
            for (int v : out.blocks[b]) cuts += out.is_cut[v] ? 1 : 0;
            if (cuts == 1) out.leaf_blocks.push_back(static_cast<int>(b));
        }
    }

    for (int v = 0; v < n; ++v)
        if (g.is_simplicial(v)) out.simplicial_vertices.push_back(v);

    std::vector<bool> in_leaf(n, false);
    for (int b : out.leaf_blocks)
        for (int v : out.blocks[b]) in_leaf[v] = true;
    for (int v : out.simplicial_vertices)
        if (in_leaf[v]) out.leaf_simplicials.push_back(v);

    return out;
}

}  // namespace specgraph
