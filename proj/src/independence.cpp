#include "specgraph/independence.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "specgraph/blocks.hpp"
#include "specgraph/families.hpp"

namespace specgraph {

namespace {

constexpr int kBruteCap = 24;

struct AlphaSearch {
    int n = 0;
    std::vector<std::uint64_t> rows;
    int best = 0;
    std::uint64_t best_set = 0;

    int clique_cover_bound(std::uint64_t pool) const {
        int cliques = 0;
        while (pool) {
            int v = std::countr_zero(pool);
            std::uint64_t clique = std::uint64_t(1) << v;
            std::uint64_t cand = pool & rows[v];
            while (cand) {
                int u = std::countr_zero(cand);
                clique |= std::uint64_t(1) << u;
                cand &= rows[u];
            }
            pool &= ~clique;
            ++cliques;
        }
        return cliques;
    }

    void run(std::uint64_t pool, int cur, std::uint64_t set) {
        if (cur > best) {
            best = cur;
            best_set = set;
        }
        if (!pool || cur + clique_cover_bound(pool) <= best) return;
        // branch on a densest vertex in the pool
        int pivot = -1, pivot_deg = -1;
        std::uint64_t scan = pool;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int d = std::popcount(rows[v] & pool);
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = v;
            }
        }
        const std::uint64_t bit = std::uint64_t(1) << pivot;
        run(pool & ~(rows[pivot] | bit), cur + 1, set | bit);
        run(pool & ~bit, cur, set);
    }
};

AlphaSearch alpha_search(const Graph& g) {
    if (g.vertex_count() > kBruteCap)
        throw std::invalid_argument("independence_number_bruteforce: supported only for n <= 24");
    AlphaSearch s;
    s.n = g.vertex_count();
    s.rows.resize(s.n);
    for (int v = 0; v < s.n; ++v) s.rows[v] = g.row64(v);
    std::uint64_t all = s.n == 64 ? ~0ULL : (std::uint64_t(1) << s.n) - 1;
    s.run(all, 0, 0);
    return s;
}

// alpha of a block forest: sum over components of the leaf-block recursion
int alpha_blocks_rec(const Graph& g, LeafChoice choice) {
    if (g.vertex_count() == 0) return 0;
    int total = 0;
    for (const auto& comp : connected_components(g)) {
        Graph sub = g.induced(comp);
        const BlockDecomposition dec = decompose_blocks(sub);
        if (dec.cut_vertices.empty()) {
            total += 1;  // single complete block, K1 included
            continue;
        }
        // peel one leaf block, keyed by its cut vertex
        int pick = -1, pick_key = -1;
        for (int b : dec.leaf_blocks) {
            int cut = -1;
            for (int v : dec.blocks[b])
                if (dec.is_cut[v]) cut = v;
            const bool better = pick == -1 || (choice == LeafChoice::Forward ? cut < pick_key
                                                                             : cut > pick_key);
            if (better) {
                pick = b;
                pick_key = cut;
            }
        }
        total += 1 + alpha_blocks_rec(sub.without_vertices(dec.blocks[pick]), choice);
    }
    return total;
}

}  // namespace

int independence_number_bruteforce(const Graph& g) { return alpha_search(g).best; }

std::vector<int> maximum_independent_set(const Graph& g) {
    AlphaSearch s = alpha_search(g);
    std::vector<int> out;
    std::uint64_t bits = s.best_set;
    while (bits) {
        out.push_back(std::countr_zero(bits));
        bits &= bits - 1;
    }
    return out;
}

int independence_number_blockgraph(const Graph& g, LeafChoice choice) {
    if (!recognize_block_graph(g))
        throw std::invalid_argument("independence_number_blockgraph: input is not a block graph");
    return alpha_blocks_rec(g, choice);
}

}  // namespace specgraph
