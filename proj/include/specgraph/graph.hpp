#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace specgraph {

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

// Undirected simple graph on vertices 0..n-1. Adjacency is kept as bitset
// rows (one or more 64-bit words per row) plus a degree array. Values are
// immutable after construction; all mutating operations return new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Duplicate and reversed pairs collapse to one edge. Throws
    // std::invalid_argument on loops or endpoints out of range.
    static Graph from_edge_list(int n, const EdgeList& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    int degree(int v) const { return degrees_[v]; }
    int max_degree() const;
    int min_degree() const;
    bool is_regular() const { return max_degree() == min_degree(); }

    std::vector<int> neighbors(int v) const;
    // Open neighborhood as a single word; valid only when n <= 64.
    std::uint64_t row64(int v) const { return rows_[static_cast<std::size_t>(v) * words_]; }
    int words_per_row() const { return words_; }
    const std::uint64_t* row_words(int v) const {
        return rows_.data() + static_cast<std::size_t>(v) * words_;
    }

    // True iff N(v) is a clique (vacuously for isolated vertices).
    bool is_simplicial(int v) const;
    // True iff the vertex set given as a mask/list is pairwise adjacent.
    bool is_clique(std::uint64_t mask) const;
    bool is_clique(const std::vector<int>& vs) const;
    bool is_complete() const { return 2 * m_ == n_ * (n_ - 1); }

    EdgeList edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    Graph with_edges(const EdgeList& add) const;
    Graph rewired(const EdgeList& remove, const EdgeList& add) const;

    // Induced subgraph on the kept vertices (relabeled 0..k-1, in the given
    // order). old_to_new, when supplied, maps original labels to new ones
    // (-1 for dropped vertices).
    Graph induced(const std::vector<int>& keep, std::vector<int>* old_to_new = nullptr) const;
    Graph without_vertices(const std::vector<int>& drop, std::vector<int>* old_to_new = nullptr) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

private:
    void set_edge(int u, int v);

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<int> degrees_;
};

bool is_connected(const Graph& g);
// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);
// Empty when the graph is disconnected; 0 for a single vertex.
std::optional<int> diameter(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

Eigen::MatrixXd adjacency_matrix(const Graph& g);

// Plain-text convenience format: first line n, then one "u v" pair per line.
Graph parse_edge_list_text(const std::string& text);
std::string to_edge_list_text(const Graph& g);

}  // namespace specgraph
