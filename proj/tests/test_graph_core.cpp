#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "specgraph/blocks.hpp"
#include "specgraph/canonical.hpp"
#include "specgraph/enumerate.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph6.hpp"

using namespace specgraph;

namespace {

Graph path_graph(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph cycle_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph complete_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

Graph star_graph(int n) {
    EdgeList e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph::from_edge_list(n, e);
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

}  // namespace

TEST_CASE("from_edge_list basics") {
    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(!p3.adjacent(0, 2));

    Graph k4 = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k4.edge_count() == 6);
    CHECK(k4.is_complete());

    Graph k1 = Graph::from_edge_list(1, {});
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);

    // duplicates and reversed pairs collapse
    Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("degree sum identity") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = random_graph(10, 0.4, rng);
        int deg_sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) deg_sum += g.degree(v);
        CHECK(deg_sum == 2 * g.edge_count());
    }
}

TEST_CASE("diameter") {
    CHECK(diameter(complete_graph(5)) == 1);
    CHECK(diameter(path_graph(4)) == 3);
    CHECK(diameter(Graph::from_edge_list(4, {{0, 1}, {2, 3}})) == std::nullopt);
    CHECK(diameter(Graph(1)) == 0);
}

TEST_CASE("block decomposition of the star") {
    auto dec = decompose_blocks(star_graph(4));
    CHECK(dec.blocks.size() == 3);
    CHECK(dec.cut_vertices == std::vector<int>{0});
    CHECK(dec.leaf_blocks.size() == 3);
    CHECK(dec.simplicial_vertices == std::vector<int>{1, 2, 3});
    CHECK(dec.leaf_simplicials == std::vector<int>{1, 2, 3});
}

TEST_CASE("block decomposition of K5") {
    auto dec = decompose_blocks(complete_graph(5));
    CHECK(dec.blocks.size() == 1);
    CHECK(dec.cut_vertices.empty());
    CHECK(dec.leaf_blocks.empty());
    CHECK(dec.simplicial_vertices.size() == 5);
}

TEST_CASE("block decomposition of triangle with pendant") {
    Graph g = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    auto dec = decompose_blocks(g);
    CHECK(dec.blocks.size() == 2);
    CHECK(dec.cut_vertices == std::vector<int>{2});
    CHECK(dec.leaf_blocks.size() == 2);
    CHECK(dec.simplicial_vertices == std::vector<int>{0, 1, 3});
}

TEST_CASE("decompose_blocks rejects disconnected input") {
    CHECK_THROWS_AS(decompose_blocks(Graph::from_edge_list(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
}

TEST_CASE("blocks partition the edge set and the block-cut tree is acyclic") {
    std::mt19937 rng(11);
    int tested = 0;
    while (tested < 200) {
        Graph g = random_graph(8, 0.3, rng);
        if (!is_connected(g)) continue;
        ++tested;
        auto dec = decompose_blocks(g);
        std::set<Edge> seen;
        int edge_total = 0;
        for (const auto& block : dec.blocks) {
            for (std::size_t i = 0; i < block.size(); ++i)
                for (std::size_t j = i + 1; j < block.size(); ++j)
                    if (g.adjacent(block[i], block[j])) {
                        bool fresh = seen.insert({block[i], block[j]}).second;
                        CHECK(fresh);
                        ++edge_total;
                    }
        }
        CHECK(edge_total == g.edge_count());
        // block-cut tree: one node per block plus one per cut vertex
        int bc_edges = 0;
        for (const auto& block : dec.blocks)
            for (int v : block) bc_edges += dec.is_cut[v] ? 1 : 0;
        int bc_nodes = static_cast<int>(dec.blocks.size() + dec.cut_vertices.size());
        CHECK(bc_edges == bc_nodes - 1);
        // two blocks share at most one vertex, and that vertex is a cut vertex
        for (std::size_t i = 0; i < dec.blocks.size(); ++i)
            for (std::size_t j = i + 1; j < dec.blocks.size(); ++j) {
                std::vector<int> inter;
                std::set_intersection(dec.blocks[i].begin(), dec.blocks[i].end(),
                                      dec.blocks[j].begin(), dec.blocks[j].end(),
                                      std::back_inserter(inter));
                CHECK(inter.size() <= 1);
                for (int v : inter) CHECK(dec.is_cut[v]);
            }
    }
}

TEST_CASE("simplicial vertex sets of canonical families") {
    for (int n = 2; n <= 8; ++n) {
        auto dec = decompose_blocks(complete_graph(n));
        CHECK(dec.simplicial_vertices.size() == static_cast<std::size_t>(n));
    }
    for (int n = 4; n <= 9; ++n) {
        auto dec = decompose_blocks(cycle_graph(n));
        CHECK(dec.simplicial_vertices.empty());
    }
}

TEST_CASE("graph6 fixed encodings") {
    CHECK(graph6_encode(complete_graph(3)) == "Bw");
    CHECK(graph6_encode(Graph(1)) == "@");
    Graph p3 = path_graph(3);
    CHECK(graph6_decode(graph6_encode(p3)) == p3);
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("B"), std::invalid_argument);       // truncated bits
    CHECK_THROWS_AS(graph6_decode("B\x1f"), std::invalid_argument);   // non-printable
    CHECK_THROWS_AS(graph6_decode("Bwx"), std::invalid_argument);     // trailing bytes
    // K2 with nonzero padding: valid would be "A?" (no edge) or "A_" (edge)
    CHECK_THROWS_AS(graph6_decode("A@"), std::invalid_argument);      // nonzero trailing bits
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> size(1, 40);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    for (int rep = 0; rep < 10000; ++rep) {
        Graph g = random_graph(size(rng), dens(rng), rng);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("graph6 size boundaries") {
    std::mt19937 rng(101);
    // largest short-form size, and the long-form header just past it
    for (int n : {62, 63, 100}) {
        Graph g = random_graph(n, 0.1, rng);
        std::string enc = graph6_encode(g);
        CHECK((n <= 62 ? enc[0] != 126 : enc[0] == 126));
        CHECK(graph6_decode(enc) == g);
    }
}

TEST_CASE("edge list text round trip") {
    Graph g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(parse_edge_list_text(to_edge_list_text(g)) == g);
    CHECK_THROWS_AS(parse_edge_list_text("3\n0"), std::invalid_argument);
}

TEST_CASE("canonical form is permutation invariant and separates classes") {
    std::mt19937 rng(5);
    for (int rep = 0; rep < 300; ++rep) {
        Graph g = random_graph(8, 0.5, rng);
        std::vector<int> perm(8);
        for (int i = 0; i < 8; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        EdgeList mapped;
        for (auto [u, v] : g.edges()) mapped.emplace_back(perm[u], perm[v]);
        Graph h = Graph::from_edge_list(8, mapped);
        CHECK(canonical_form(g) == canonical_form(h));
    }
    CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(4)));
    CHECK(are_isomorphic(cycle_graph(5), cycle_graph(5)));
    CHECK(!are_isomorphic(cycle_graph(6), path_graph(6)));
}

TEST_CASE("canonical_graph inverts canonical_form") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = random_graph(7, 0.4, rng);
        auto form = canonical_form(g);
        Graph rep_graph = canonical_graph(form);
        CHECK(canonical_form(rep_graph) == form);
        CHECK(rep_graph.edge_count() == g.edge_count());
    }
}

TEST_CASE("enumeration counts match the literature") {
    // trees on n vertices: 1, 1, 1, 2, 3, 6, 11, 23, 47
    const int tree_counts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 1; n <= 9; ++n)
        CHECK(collect_family(n, {FamilyKind::Tree}).size() == static_cast<std::size_t>(tree_counts[n]));

    // connected graphs on n vertices: 1, 1, 2, 6, 21, 112, 853
    const int conn_counts[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n)
        CHECK(collect_family(n, {FamilyKind::AllConnected}).size() ==
              static_cast<std::size_t>(conn_counts[n]));
}

TEST_CASE("enumeration is order independent and emits canonical-distinct graphs") {
    for (int n = 4; n <= 7; ++n) {
        auto fwd = collect_family(n, {FamilyKind::Tree}, EnumOrder::Forward);
        auto rev = collect_family(n, {FamilyKind::Tree}, EnumOrder::Reversed);
        CHECK(fwd.size() == rev.size());
        std::set<CanonicalForm> forms;
        for (const auto& g : fwd) CHECK(forms.insert(canonical_form(g)).second);
    }
}

TEST_CASE("enumeration streams stop early") {
    int count = 0;
    enumerate_family(7, {FamilyKind::Tree}, [&](const Graph&) { return ++count < 3; });
    CHECK(count == 3);
}

TEST_CASE("induced subgraph relabels with old-to-new map") {
    Graph g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    std::vector<int> map;
    Graph h = g.without_vertices({2}, &map);
    CHECK(h.vertex_count() == 4);
    CHECK(map == std::vector<int>{0, 1, -1, 2, 3});
    CHECK(h.adjacent(0, 1));
    CHECK(!h.adjacent(1, 2));
}
