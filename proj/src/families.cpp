#include "specgraph/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "specgraph/blocks.hpp"

namespace specgraph {

Graph pineapple_qp(int q, int p) {
    if (q < 1 || p < 0) throw std::invalid_argument("pineapple_qp: need q >= 1, p >= 0");
    EdgeList edges;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) edges.emplace_back(i, j);
    for (int i = 0; i < p; ++i) edges.emplace_back(0, q + i);
    return Graph::from_edge_list(q + p, edges);
}

Graph pineapple(int n, int alpha) {
    if (alpha < 1 || alpha > std::max(n - 1, 1))
        throw std::invalid_argument("pineapple: need 1 <= alpha <= n-1");
    return pineapple_qp(n - alpha + 1, alpha - 1);
}

Graph s_knk(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("s_knk: need 1 <= k <= n");
    EdgeList edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

std::optional<KTreeCertificate> recognize_ktree(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("recognize_ktree: need k >= 1");
    const int n = g.vertex_count();
    if (n < k) return std::nullopt;

    std::vector<int> labels(n);  // current index -> original label
    for (int v = 0; v < n; ++v) labels[v] = v;
    Graph cur = g;
    std::vector<int> order;
    std::vector<std::vector<int>> attachments;

    while (cur.vertex_count() > k) {
        int pick = -1;
        for (int v = 0; v < cur.vertex_count(); ++v) {
            if (cur.degree(v) == k && cur.is_simplicial(v)) {
                pick = v;
                break;
            }
        }
        if (pick == -1) return std::nullopt;
        std::vector<int> attach;
        for (int u : cur.neighbors(pick)) attach.push_back(labels[u]);
        order.push_back(labels[pick]);
        attachments.push_back(std::move(attach));

        std::vector<int> keep;
        for (int v = 0; v < cur.vertex_count(); ++v)
            if (v != pick) keep.push_back(v);
        std::vector<int> new_labels;
        for (int v : keep) new_labels.push_back(labels[v]);
        cur = cur.induced(keep);
        labels = std::move(new_labels);
    }
    if (!cur.is_complete()) return std::nullopt;

    KTreeCertificate cert;
    cert.k = k;
    cert.base = labels;
    std::reverse(order.begin(), order.end());
    std::reverse(attachments.begin(), attachments.end());
    cert.order = std::move(order);
    cert.attachments = std::move(attachments);
    return cert;
}

bool replay_ktree_certificate(const Graph& g, const KTreeCertificate& cert) {
    const int n = g.vertex_count();
    if (static_cast<int>(cert.base.size()) != cert.k) return false;
    if (static_cast<int>(cert.base.size() + cert.order.size()) != n) return false;

    Graph built(n);
    EdgeList edges;
    for (std::size_t i = 0; i < cert.base.size(); ++i)
        for (std::size_t j = i + 1; j < cert.base.size(); ++j)
            edges.emplace_back(cert.base[i], cert.base[j]);
    built = Graph::from_edge_list(n, edges);
    for (std::size_t t = 0; t < cert.order.size(); ++t) {
        const auto& attach = cert.attachments[t];
        if (static_cast<int>(attach.size()) != cert.k) return false;
        if (!built.is_clique(attach)) return false;
        for (int u : attach) built = built.with_edge(cert.order[t], u);
    }
    return built == g;
}

bool recognize_distance_hereditary(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("recognize_distance_hereditary: graph must be connected");

    // prune pendant vertices and twins until stuck; reducing to K1 is
    // exactly distance-hereditariness
    std::vector<int> labels(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) labels[v] = v;
    Graph cur = g;
    while (cur.vertex_count() > 1) {
        int drop = -1;
        const int n = cur.vertex_count();
        for (int v = 0; v < n && drop == -1; ++v)
            if (cur.degree(v) == 1) drop = v;
        for (int u = 0; u < n && drop == -1; ++u) {
            for (int v = u + 1; v < n && drop == -1; ++v) {
                if (n <= 64) {
                    const std::uint64_t ru = cur.row64(u), rv = cur.row64(v);
                    const std::uint64_t bu = std::uint64_t(1) << u, bv = std::uint64_t(1) << v;
                    if (ru == rv || (ru | bu) == (rv | bv)) drop = v;
                } else {
                    bool open_eq = true, closed_eq = true;
                    for (int w = 0; w < n; ++w) {
                        if (w == u || w == v) continue;
                        if (cur.adjacent(u, w) != cur.adjacent(v, w)) {
                            open_eq = closed_eq = false;
                            break;
                        }
                    }
                    if (open_eq && (!cur.adjacent(u, v) || closed_eq)) drop = v;
                }
            }
        }
        if (drop == -1) return false;
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (v != drop) keep.push_back(v);
        cur = cur.induced(keep);
    }
    return true;
}

bool recognize_block_graph(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("recognize_block_graph: graph must be connected");
    const BlockDecomposition dec = decompose_blocks(g);
    for (const auto& block : dec.blocks)
        if (!g.is_clique(block)) return false;
    return true;
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

}  // namespace specgraph
