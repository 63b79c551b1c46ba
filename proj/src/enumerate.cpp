#include "specgraph/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "specgraph/canonical.hpp"
#include "specgraph/families.hpp"

namespace specgraph {

namespace {

using FormSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

std::vector<CanonicalForm> sorted(const FormSet& set) {
    std::vector<CanonicalForm> out(set.begin(), set.end());
    std::sort(out.begin(), out.end());
    return out;
}

template <typename T>
void for_each_in_order(std::vector<T> items, EnumOrder order, const std::function<void(const T&)>& fn) {
    if (order == EnumOrder::Reversed) std::reverse(items.begin(), items.end());
    for (const auto& item : items) fn(item);
}

// All isomorphism classes of (not necessarily connected) graphs on n
// vertices, grown one vertex at a time over all neighborhood subsets.
std::vector<CanonicalForm> all_graph_classes(int n, EnumOrder order) {
    FormSet level;
    level.insert(canonical_form(Graph(1)));
    for (int k = 1; k < n; ++k) {
        FormSet next;
        for (const CanonicalForm& form : sorted(level)) {
            const Graph g = canonical_graph(form);
            std::vector<std::uint32_t> masks;
            for (std::uint32_t mask = 0; mask < (1u << k); ++mask) masks.push_back(mask);
            if (order == EnumOrder::Reversed) std::reverse(masks.begin(), masks.end());
            for (std::uint32_t mask : masks) {
                EdgeList edges = g.edges();
                for (int v = 0; v < k; ++v)
                    if ((mask >> v) & 1u) edges.emplace_back(v, k);
                next.insert(canonical_form(Graph::from_edge_list(k + 1, edges)));
            }
        }
        level = std::move(next);
    }
    return sorted(level);
}

// k-trees on exactly n vertices, grown by simplicial attachment.
std::vector<CanonicalForm> ktree_classes(int n, int k, EnumOrder order) {
    if (n < k) return {};
    FormSet level;
    level.insert(canonical_form(s_knk(k, k)));  // K_k
    for (int m = k; m < n; ++m) {
        FormSet next;
        for (const CanonicalForm& form : sorted(level)) {
            const Graph g = canonical_graph(form);
            // enumerate k-cliques as attachment sets
            std::vector<std::vector<int>> cliques;
            std::vector<int> pick;
            std::function<void(int)> combos = [&](int start) {
                if (static_cast<int>(pick.size()) == k) {
                    if (g.is_clique(pick)) cliques.push_back(pick);
                    return;
                }
                for (int v = start; v < m; ++v) {
                    pick.push_back(v);
                    combos(v + 1);
                    pick.pop_back();
                }
            };
            combos(0);
            if (order == EnumOrder::Reversed) std::reverse(cliques.begin(), cliques.end());
            for (const auto& clique : cliques) {
                EdgeList edges = g.edges();
                for (int v : clique) edges.emplace_back(v, m);
                next.insert(canonical_form(Graph::from_edge_list(m + 1, edges)));
            }
        }
        level = std::move(next);
    }
    return sorted(level);
}

// Connected block graphs on exactly n vertices, grown by gluing a complete
// block of size s >= 2 onto an existing vertex.
std::vector<CanonicalForm> block_graph_classes(int n, EnumOrder order) {
    std::vector<FormSet> by_count(n + 1);
    by_count[1].insert(canonical_form(Graph(1)));
    for (int m = 1; m < n; ++m) {
        for (const CanonicalForm& form : sorted(by_count[m])) {
            const Graph g = canonical_graph(form);
            std::vector<std::pair<int, int>> moves;  // (attach vertex, block size)
            for (int v = 0; v < m; ++v)
                for (int s = 2; m + s - 1 <= n; ++s) moves.emplace_back(v, s);
            if (order == EnumOrder::Reversed) std::reverse(moves.begin(), moves.end());
            for (const auto& [v, s] : moves) {
                EdgeList edges = g.edges();
                std::vector<int> block{v};
                for (int i = 0; i < s - 1; ++i) block.push_back(m + i);
                for (std::size_t i = 0; i < block.size(); ++i)
                    for (std::size_t j = i + 1; j < block.size(); ++j)
                        edges.emplace_back(block[i], block[j]);
                by_count[m + s - 1].insert(canonical_form(Graph::from_edge_list(m + s - 1, edges)));
            }
        }
    }
    return sorted(by_count[n]);
}

}  // namespace

void enumerate_family(int n, FamilySpec family, const GraphSink& sink, EnumOrder order) {
    if (n < 1) throw std::invalid_argument("enumerate_family: need n >= 1");
    const bool small_cap =
        family.kind == FamilyKind::AllConnected || family.kind == FamilyKind::DistanceHereditary;
    if (small_cap && n > 9)
        throw std::invalid_argument("enumerate_family: n above the supported cap (9)");
    if (!small_cap && n > 11)
        throw std::invalid_argument("enumerate_family: n above the supported cap (11)");

    std::vector<CanonicalForm> forms;
    switch (family.kind) {
        case FamilyKind::AllConnected:
        case FamilyKind::DistanceHereditary:
            forms = all_graph_classes(n, order);
            break;
        case FamilyKind::Tree:
            forms = ktree_classes(n, 1, order);
            break;
        case FamilyKind::KTree:
            if (family.k < 1) throw std::invalid_argument("enumerate_family: need k >= 1");
            forms = ktree_classes(n, family.k, order);
            break;
        case FamilyKind::Block:
            forms = block_graph_classes(n, order);
            break;
    }

    for (const CanonicalForm& form : forms) {
        const Graph g = canonical_graph(form);
        if (family.kind == FamilyKind::AllConnected || family.kind == FamilyKind::DistanceHereditary) {
            if (!is_connected(g)) continue;
            if (family.kind == FamilyKind::DistanceHereditary && !recognize_distance_hereditary(g))
                continue;
        }
        if (!sink(g)) return;
    }
}

std::vector<Graph> collect_family(int n, FamilySpec family, EnumOrder order) {
    std::vector<Graph> out;
    enumerate_family(n, family, [&](const Graph& g) {
        out.push_back(g);
        return true;
    }, order);
    return out;
}

}  // namespace specgraph
