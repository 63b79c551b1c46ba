#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "specgraph/enumerate.hpp"
#include "specgraph/families.hpp"
#include "specgraph/flow.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/independence.hpp"
#include "specgraph/params.hpp"

using namespace specgraph;

namespace {

Graph cycle_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph complete_graph(int n) { return s_knk(n, n); }

// minimum number of edges whose removal disconnects, by direct search
int min_disconnecting_set(const Graph& g) {
    const EdgeList edges = g.edges();
    const int m = static_cast<int>(edges.size());
    for (int size = 0; size <= m; ++size) {
        std::vector<int> pick(size);
        std::function<bool(int, int)> choose = [&](int start, int depth) {
            if (depth == size) {
                Graph h = g;
                for (int i = 0; i < size; ++i)
                    h = h.without_edge(edges[pick[i]].first, edges[pick[i]].second);
                return !is_connected(h);
            }
            for (int i = start; i < m; ++i) {
                pick[depth] = i;
                if (choose(i + 1, depth + 1)) return true;
            }
            return false;
        };
        if (choose(0, 0)) return size;
    }
    return m;
}

// exact alpha by plain subset enumeration
int alpha_subsets(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if ((mask >> u) & 1u)
                for (int v = u + 1; v < n && ok; ++v)
                    if (((mask >> v) & 1u) && g.adjacent(u, v)) ok = false;
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

Graph random_connected(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    while (true) {
        EdgeList e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) e.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, e);
        if (is_connected(g)) return g;
    }
}

}  // namespace

TEST_CASE("edge connectivity of reference graphs") {
    for (int n = 2; n <= 8; ++n) CHECK(edge_connectivity(complete_graph(n)) == n - 1);
    for (int n = 3; n <= 8; ++n) CHECK(edge_connectivity(cycle_graph(n)) == 2);
    for (const Graph& t : collect_family(7, {FamilyKind::Tree}))
        CHECK(edge_connectivity(t) == 1);
    CHECK(edge_connectivity(pineapple(6, 2)) == 1);
    CHECK_THROWS_AS(edge_connectivity(Graph(1)), std::invalid_argument);
    CHECK_THROWS_AS(edge_connectivity(Graph::from_edge_list(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
}

TEST_CASE("edge connectivity equals the brute-force minimum disconnecting set") {
    for (int n = 2; n <= 6; ++n)
        enumerate_family(n, {FamilyKind::AllConnected}, [&](const Graph& g) {
            CHECK(edge_connectivity(g) == min_disconnecting_set(g));
            return true;
        });
}

TEST_CASE("edge-disjoint path families") {
    // opposite vertices of C4: two paths of length two
    auto paths = edge_disjoint_paths(cycle_graph(4), 0, 2);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].size() == 3);
    CHECK(paths[1].size() == 3);

    CHECK(edge_disjoint_paths(complete_graph(4), 0, 3).size() == 3);

    // unique path in a tree
    Graph t = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    auto tp = edge_disjoint_paths(t, 0, 4);
    REQUIRE(tp.size() == 1);
    CHECK(tp[0] == std::vector<int>{0, 1, 2, 4});

    CHECK_THROWS_AS(edge_disjoint_paths(t, 1, 1), std::invalid_argument);
}

TEST_CASE("path families are valid, edge disjoint, and of maximum size") {
    std::mt19937 rng(97);
    for (int rep = 0; rep < 200; ++rep) {
        Graph g = random_connected(2 + rep % 8, 0.5, rng);
        const int n = g.vertex_count();
        std::uniform_int_distribution<int> pick(0, n - 1);
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        auto paths = edge_disjoint_paths(g, u, v);
        CHECK(static_cast<int>(paths.size()) == local_edge_connectivity(g, u, v));
        std::set<Edge> used;
        for (const auto& path : paths) {
            REQUIRE(path.size() >= 2);
            CHECK(path.front() == u);
            CHECK(path.back() == v);
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                CHECK(g.adjacent(path[i], path[i + 1]));
                Edge e{std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])};
                CHECK(used.insert(e).second);  // no edge reused anywhere
            }
        }
    }
}

TEST_CASE("independence number brute force") {
    for (int n = 1; n <= 8; ++n) CHECK(independence_number_bruteforce(complete_graph(n)) == 1);
    CHECK(independence_number_bruteforce(cycle_graph(5)) == 2);
    for (int n = 4; n <= 9; ++n)
        for (int alpha = 1; alpha <= n - 1; ++alpha)
            CHECK(independence_number_bruteforce(pineapple(n, alpha)) == alpha);

    std::mt19937 rng(53);
    for (int rep = 0; rep < 300; ++rep) {
        std::uniform_int_distribution<int> size(1, 10);
        std::bernoulli_distribution coin(0.4);
        int n = size(rng);
        EdgeList e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) e.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, e);
        CHECK(independence_number_bruteforce(g) == alpha_subsets(g));
    }
}

TEST_CASE("maximum independent set witness is independent and maximum") {
    std::mt19937 rng(59);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = random_connected(3 + rep % 8, 0.5, rng);
        auto set = maximum_independent_set(g);
        CHECK(static_cast<int>(set.size()) == independence_number_bruteforce(g));
        for (std::size_t i = 0; i < set.size(); ++i)
            for (std::size_t j = i + 1; j < set.size(); ++j) CHECK(!g.adjacent(set[i], set[j]));
    }
}

TEST_CASE("block-graph independence recursion") {
    CHECK(independence_number_blockgraph(s_knk(6, 1)) == 5);  // star
    for (int n = 3; n <= 9; ++n)
        for (int alpha = 1; alpha <= n - 1; ++alpha)
            CHECK(independence_number_blockgraph(pineapple(n, alpha)) == alpha);
    CHECK_THROWS_AS(independence_number_blockgraph(cycle_graph(4)), std::invalid_argument);

    for (int n = 1; n <= 8; ++n)
        enumerate_family(n, {FamilyKind::Block}, [&](const Graph& g) {
            const int brute = independence_number_bruteforce(g);
            CHECK(independence_number_blockgraph(g, LeafChoice::Forward) == brute);
            CHECK(independence_number_blockgraph(g, LeafChoice::Reversed) == brute);
            return true;
        });
}

TEST_CASE("block-graph recursion matches brute force up to eleven vertices") {
    for (int n : {10, 11})
        enumerate_family(n, {FamilyKind::Block}, [&](const Graph& g) {
            CHECK(independence_number_blockgraph(g) == independence_number_bruteforce(g));
            return true;
        });
}

TEST_CASE("compute_params") {
    GraphParams p = compute_params(pineapple(6, 2));
    CHECK(p.n == 6);
    CHECK(p.m == 11);  // K5 plus one pendant
    CHECK(p.delta_max == 5);
    CHECK(p.delta_min == 1);
    CHECK(p.diameter == 2);
    CHECK(p.edge_connectivity == 1);
    CHECK(p.independence_number == 2);
    CHECK(!p.is_regular);

    GraphParams k1 = compute_params(Graph(1));
    CHECK(k1.n == 1);
    CHECK(k1.diameter == 0);
    CHECK(k1.edge_connectivity == 0);
    CHECK(k1.independence_number == 1);
    CHECK(k1.is_regular);

    CHECK_THROWS_AS(compute_params(Graph::from_edge_list(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
}

TEST_CASE("parameter invariants on random connected graphs") {
    std::mt19937 rng(61);
    for (int rep = 0; rep < 200; ++rep) {
        Graph g = random_connected(2 + rep % 9, 0.45, rng);
        GraphParams p = compute_params(g);
        CHECK(p.edge_connectivity <= p.delta_min);
        CHECK(p.diameter >= 1);
        CHECK(p.independence_number >= 1);
        CHECK(p.is_regular == (p.delta_max == p.delta_min));
    }
}

TEST_CASE("leaf block ledger on the star") {
    // every block of a star is a leaf block, so the pruned graph is K1
    LeafBlockLedger ledger = leaf_block_ledger(s_knk(5, 1));
    CHECK(ledger.removed == std::vector<int>{1, 2, 3, 4});
    CHECK(ledger.h.vertex_count() == 1);
    REQUIRE(ledger.rows.size() == 1);
    CHECK(ledger.rows[0].block == std::vector<int>{0});
    CHECK(ledger.rows[0].leaf_count == 4);
    CHECK(!ledger.rows[0].is_leaf_of_h);
}

TEST_CASE("leaf block ledger rejects complete and non-block inputs") {
    CHECK_THROWS_AS(leaf_block_ledger(complete_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(leaf_block_ledger(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("leaf block ledger on a clique chain") {
    // triangles {0,1,2}-{2,3,4}-{4,5,6}-{6,7,8} glued in a path
    EdgeList e;
    auto tri = [&](int a, int b, int c) {
        e.emplace_back(a, b);
        e.emplace_back(a, c);
        e.emplace_back(b, c);
    };
    tri(0, 1, 2);
    tri(2, 3, 4);
    tri(4, 5, 6);
    tri(6, 7, 8);
    Graph g = Graph::from_edge_list(9, e);

    LeafBlockLedger ledger = leaf_block_ledger(g);
    // outer triangles are leaf blocks of G; their simplicial vertices leave
    CHECK(ledger.removed == std::vector<int>{0, 1, 7, 8});
    CHECK(ledger.h.vertex_count() == 5);
    REQUIRE(ledger.rows.size() == 2);

    for (const auto& row : ledger.rows) {
        CHECK(row.is_leaf_of_h);
        CHECK(row.leaf_count == 1);
        CHECK(row.has_simplicial);  // vertex 3 resp. 5 is simplicial in G
        CHECK(row.cut_vertex_in_h == 4);
        CHECK(row.attached_leaves.size() == 2);
    }

    // the two deletion identities, against brute force
    const int alpha = independence_number_bruteforce(g);
    for (const auto& row : ledger.rows) {
        std::vector<int> drop = row.block;
        drop.insert(drop.end(), row.attached_leaves.begin(), row.attached_leaves.end());
        CHECK(alpha == independence_number_bruteforce(g.without_vertices(drop)) + row.leaf_count + 1);
    }
}

TEST_CASE("leaf block ledger identity without simplicial vertices") {
    // same chain, but a pendant hangs off vertex 3, so block {2,3,4} has no
    // simplicial vertex of G
    EdgeList e;
    auto tri = [&](int a, int b, int c) {
        e.emplace_back(a, b);
        e.emplace_back(a, c);
        e.emplace_back(b, c);
    };
    tri(0, 1, 2);
    tri(2, 3, 4);
    tri(4, 5, 6);
    tri(6, 7, 8);
    e.emplace_back(3, 9);
    Graph g = Graph::from_edge_list(10, e);

    LeafBlockLedger ledger = leaf_block_ledger(g);
    const int alpha = independence_number_bruteforce(g);
    bool saw_no_simplicial_row = false;
    for (const auto& row : ledger.rows) {
        if (!row.is_leaf_of_h) continue;
        if (row.has_simplicial) continue;
        saw_no_simplicial_row = true;
        CHECK(row.block == std::vector<int>{2, 3, 4});
        CHECK(row.leaf_count == 2);  // triangle {0,1,2} and pendant edge {3,9}
        std::vector<int> drop = row.block;
        drop.insert(drop.end(), row.attached_leaves.begin(), row.attached_leaves.end());
        std::erase(drop, row.cut_vertex_in_h);
        CHECK(alpha == independence_number_bruteforce(g.without_vertices(drop)) + row.leaf_count);
    }
    CHECK(saw_no_simplicial_row);
}

TEST_CASE("every maximum independent set meets a simplicial block once") {
    for (int n = 2; n <= 7; ++n)
        enumerate_family(n, {FamilyKind::Block}, [&](const Graph& g) {
            auto dec = decompose_blocks(g);
            std::vector<bool> simplicial(n, false);
            for (int v : dec.simplicial_vertices) simplicial[v] = true;
            const int alpha = independence_number_bruteforce(g);
            // enumerate all maximum independent sets
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (std::popcount(mask) != alpha) continue;
                bool indep = true;
                for (int u = 0; u < n && indep; ++u)
                    if ((mask >> u) & 1u)
                        for (int v = u + 1; v < n && indep; ++v)
                            if (((mask >> v) & 1u) && g.adjacent(u, v)) indep = false;
                if (!indep) continue;
                for (const auto& block : dec.blocks) {
                    bool has_simp = false;
                    for (int v : block) has_simp = has_simp || simplicial[v];
                    if (!has_simp) continue;
                    int hits = 0;
                    for (int v : block) hits += (mask >> v) & 1u;
                    CHECK(hits == 1);
                }
            }
            return true;
        });
}
