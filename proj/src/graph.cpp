#include "specgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace specgraph {

Graph::Graph(int n) : n_(n), m_(0), words_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("graph: vertex count must be nonnegative");
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
    degrees_.assign(n_, 0);
}

void Graph::set_edge(int u, int v) {
    if (adjacent(u, v)) return;
    rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
    ++degrees_[u];
    ++degrees_[v];
    ++m_;
}

Graph Graph::from_edge_list(int n, const EdgeList& edges) {
    if (n < 1) throw std::invalid_argument("from_edge_list: need at least one vertex");
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("from_edge_list: endpoint out of range");
        if (u == v) throw std::invalid_argument("from_edge_list: loop rejected");
        g.set_edge(u, v);
    }
    return g;
}

int Graph::max_degree() const {
    return n_ == 0 ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

int Graph::min_degree() const {
    return n_ == 0 ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degrees_[v]);
    const std::uint64_t* row = row_words(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

bool Graph::is_simplicial(int v) const {
    const std::uint64_t* nv = row_words(v);
    for (int u : neighbors(v)) {
        const std::uint64_t* nu = row_words(u);
        // every other neighbor of v must be adjacent to u
        for (int w = 0; w < words_; ++w) {
            std::uint64_t need = nv[w] & ~nu[w];
            if (w == (u >> 6)) need &= ~(std::uint64_t(1) << (u & 63));
            if (need) return false;
        }
    }
    return true;
}

bool Graph::is_clique(std::uint64_t mask) const {
    std::uint64_t rest = mask;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if ((row64(v) & rest) != rest) return false;
    }
    return true;
}

bool Graph::is_clique(const std::vector<int>& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!adjacent(vs[i], vs[j])) return false;
    return true;
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    if (u == v) throw std::invalid_argument("with_edge: loop rejected");
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("with_edge: endpoint out of range");
    if (adjacent(u, v)) throw std::invalid_argument("with_edge: edge already present");
    Graph g = *this;
    g.set_edge(u, v);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    if (!adjacent(u, v)) throw std::invalid_argument("without_edge: edge not present");
    Graph g = *this;
    g.rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t(1) << (v & 63));
    g.rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t(1) << (u & 63));
    --g.degrees_[u];
    --g.degrees_[v];
    --g.m_;
    return g;
}

Graph Graph::with_edges(const EdgeList& add) const {
    Graph g = *this;
    for (const auto& [u, v] : add) {
        if (u == v) throw std::invalid_argument("with_edges: loop rejected");
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("with_edges: endpoint out of range");
        g.set_edge(u, v);
    }
    return g;
}

Graph Graph::rewired(const EdgeList& remove, const EdgeList& add) const {
    Graph g = *this;
    for (const auto& [u, v] : remove) g = g.without_edge(u, v);
    return g.with_edges(add);
}

Graph Graph::induced(const std::vector<int>& keep, std::vector<int>* old_to_new) const {
    std::vector<int> map(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
        if (map[v] != -1) throw std::invalid_argument("induced: duplicate vertex");
        map[v] = static_cast<int>(i);
    }
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) g.set_edge(static_cast<int>(i), static_cast<int>(j));
    if (old_to_new) *old_to_new = std::move(map);
    return g;
}

Graph Graph::without_vertices(const std::vector<int>& drop, std::vector<int>* old_to_new) const {
    std::vector<bool> gone(n_, false);
    for (int v : drop) {
        if (v < 0 || v >= n_) throw std::invalid_argument("without_vertices: vertex out of range");
        gone[v] = true;
    }
    std::vector<int> keep;
    keep.reserve(n_);
    for (int v = 0; v < n_; ++v)
        if (!gone[v]) keep.push_back(v);
    return induced(keep, old_to_new);
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::optional<int> diameter(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int x : dist) {
            if (x == -1) return std::nullopt;
            d = std::max(d, x);
        }
    }
    return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.vertex_count(), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[s] = true;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    q.push(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a(u, v) = 1.0;
    return a;
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    int n;
    if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
    EdgeList edges;
    int u, v;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint");
        edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges);
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace specgraph
