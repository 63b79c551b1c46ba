#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "specgraph/canonical.hpp"
#include "specgraph/enumerate.hpp"
#include "specgraph/families.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/independence.hpp"

using namespace specgraph;

namespace {

Graph cycle_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

// definitional oracle: every connected induced subgraph preserves pairwise
// distances of the parent graph
bool dh_oracle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> dist(n);
    for (int v = 0; v < n; ++v) dist[v] = bfs_distances(g, v);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) keep.push_back(v);
        if (keep.size() < 2) continue;
        Graph h = g.induced(keep);
        if (!is_connected(h)) continue;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            auto hd = bfs_distances(h, static_cast<int>(i));
            for (std::size_t j = 0; j < keep.size(); ++j)
                if (hd[j] != dist[keep[i]][keep[j]]) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("pineapple construction") {
    CHECK(pineapple(5, 1).is_complete());
    CHECK(canonical_form(pineapple(6, 5)) == canonical_form(s_knk(6, 1)));  // the star

    Graph p = pineapple(5, 3);  // triangle plus two pendants on vertex 0
    CHECK(p.vertex_count() == 5);
    CHECK(p.edge_count() == 5);
    CHECK(p.degree(0) == 4);
    CHECK(independence_number_bruteforce(p) == 3);

    // exactly one clique vertex carries the pendants
    Graph p73 = pineapple(7, 3);
    int carriers = 0;
    for (int v = 0; v < 5; ++v)
        if (p73.degree(v) > 4) ++carriers;
    CHECK(carriers == 1);

    CHECK_THROWS_AS(pineapple(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(pineapple(5, 0), std::invalid_argument);
}

TEST_CASE("split graph construction") {
    CHECK(canonical_form(s_knk(6, 1)) == canonical_form(pineapple(6, 5)));
    CHECK(s_knk(5, 5).is_complete());
    CHECK(recognize_ktree(s_knk(5, 2), 2).has_value());
    CHECK(s_knk(5, 2).edge_count() == 1 + 2 * 3);
}

TEST_CASE("k-tree recognition") {
    CHECK(recognize_ktree(s_knk(3, 3), 2).has_value());   // K3 is a 2-tree
    CHECK(!recognize_ktree(cycle_graph(4), 2).has_value());
    CHECK(recognize_ktree(s_knk(5, 2), 2).has_value());

    // certificates replay to the input graph
    for (int n = 2; n <= 8; ++n)
        for (const Graph& g : collect_family(n, {FamilyKind::KTree, 2})) {
            auto cert = recognize_ktree(g, 2);
            REQUIRE(cert.has_value());
            CHECK(replay_ktree_certificate(g, *cert));
        }

    // a k-tree for one k is generally rejected for another
    CHECK(!recognize_ktree(s_knk(5, 2), 3).has_value());
    CHECK(!recognize_ktree(s_knk(6, 3), 2).has_value());
}

TEST_CASE("recognize_ktree accepts split graphs for all valid sizes") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) CHECK(recognize_ktree(s_knk(n, k), k).has_value());
}

TEST_CASE("distance-hereditary recognition on named graphs") {
    for (int n = 2; n <= 9; ++n)
        for (const Graph& t : collect_family(n, {FamilyKind::Tree}))
            CHECK(recognize_distance_hereditary(t));
    CHECK(!recognize_distance_hereditary(cycle_graph(5)));
    CHECK(!recognize_distance_hereditary(cycle_graph(6)));
    CHECK(recognize_distance_hereditary(cycle_graph(3)));
    CHECK(recognize_distance_hereditary(cycle_graph(4)));  // C4 = two false twins pairs
    CHECK_THROWS_AS(recognize_distance_hereditary(Graph::from_edge_list(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
}

TEST_CASE("distance-hereditary recognition matches the definitional oracle") {
    for (int n = 2; n <= 7; ++n)
        enumerate_family(n, {FamilyKind::AllConnected}, [&](const Graph& g) {
            CHECK(recognize_distance_hereditary(g) == dh_oracle(g));
            return true;
        });
}

TEST_CASE("noncomplete block graphs are distance hereditary") {
    for (int n = 3; n <= 8; ++n)
        enumerate_family(n, {FamilyKind::Block}, [&](const Graph& g) {
            CHECK(recognize_distance_hereditary(g));
            return true;
        });
}

TEST_CASE("block graph recognition") {
    for (int n = 1; n <= 8; ++n)
        for (const Graph& t : collect_family(n, {FamilyKind::Tree}))
            CHECK(recognize_block_graph(t));
    for (int n = 3; n <= 8; ++n)
        for (int alpha = 1; alpha <= n - 1; ++alpha)
            CHECK(recognize_block_graph(pineapple(n, alpha)));
    CHECK(!recognize_block_graph(cycle_graph(4)));
    CHECK(!recognize_block_graph(cycle_graph(6)));
    CHECK(recognize_block_graph(cycle_graph(3)));
}

TEST_CASE("every enumerated family member passes its recognizer") {
    for (int n = 2; n <= 8; ++n) {
        for (const Graph& g : collect_family(n, {FamilyKind::Block}))
            CHECK(recognize_block_graph(g));
        for (const Graph& g : collect_family(n, {FamilyKind::KTree, 2}))
            CHECK(recognize_ktree(g, 2).has_value());
        for (const Graph& g : collect_family(n, {FamilyKind::Tree})) CHECK(is_tree(g));
    }
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : collect_family(n, {FamilyKind::DistanceHereditary}))
            CHECK(recognize_distance_hereditary(g));
}

TEST_CASE("hand-counted enumeration sizes") {
    CHECK(collect_family(5, {FamilyKind::Tree}).size() == 3);
    CHECK(collect_family(4, {FamilyKind::AllConnected}).size() == 6);
    // 1-trees are trees
    for (int n = 1; n <= 9; ++n) {
        auto trees = collect_family(n, {FamilyKind::Tree});
        auto onetrees = collect_family(n, {FamilyKind::KTree, 1});
        REQUIRE(trees.size() == onetrees.size());
        for (std::size_t i = 0; i < trees.size(); ++i)
            CHECK(canonical_form(trees[i]) == canonical_form(onetrees[i]));
    }
}

TEST_CASE("enumerate_family enforces its caps") {
    CHECK_THROWS_AS(collect_family(10, {FamilyKind::AllConnected}), std::invalid_argument);
    CHECK_THROWS_AS(collect_family(12, {FamilyKind::Block}), std::invalid_argument);
}
