#include "specgraph/canonical.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace specgraph {

namespace {

constexpr int kMaxN = 16;

// Iterated neighborhood-color refinement (1-WL). Returns a color per vertex;
// color ranks are isomorphism-invariant by construction.
std::vector<int> refine_colors(const std::vector<std::uint32_t>& rows, int n) {
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = std::popcount(rows[v]);
    {
        std::vector<int> sorted = colors;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), colors[v]) -
                                         sorted.begin());
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            std::uint32_t bits = rows[v];
            while (bits) {
                int u = std::countr_zero(bits);
                bits &= bits - 1;
                nb.push_back(colors[u]);
            }
            std::sort(nb.begin(), nb.end());
            sigs[v].push_back(colors[v]);
            sigs[v].insert(sigs[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) -
                                       sorted.begin());
        if (next == colors) break;
        colors = std::move(next);
    }
    return colors;
}

struct Minimizer {
    int n = 0;
    std::vector<std::uint32_t> rows;
    std::vector<std::vector<int>> cells;  // vertices per color rank
    std::vector<int> twin_class;
    std::array<int, kMaxN> order{};
    std::uint32_t placed_mask = 0;
    int placed = 0;
    std::uint64_t cur0 = 0, cur1 = 0;
    int bits_used = 0;
    std::uint64_t best0 = ~0ULL, best1 = ~0ULL;

    void append_bit(bool b) {
        if (b) {
            if (bits_used < 64)
                cur0 |= std::uint64_t(1) << (63 - bits_used);
            else
                cur1 |= std::uint64_t(1) << (127 - bits_used);
        }
        ++bits_used;
    }

    // true when the current prefix already exceeds the best string
    bool prefix_beaten() const {
        if (bits_used == 0) return false;
        if (bits_used <= 64) {
            std::uint64_t mask = bits_used == 64 ? ~0ULL : ~0ULL << (64 - bits_used);
            return cur0 > (best0 & mask);
        }
        if (cur0 != best0) return cur0 > best0;
        std::uint64_t mask = bits_used == 128 ? ~0ULL : ~0ULL << (128 - bits_used);
        return cur1 > (best1 & mask);
    }

    void search() {
        if (placed == n) {
            if (cur0 < best0 || (cur0 == best0 && cur1 < best1)) {
                best0 = cur0;
                best1 = cur1;
            }
            return;
        }
        // active cell: first with an unplaced vertex
        const std::vector<int>* cell = nullptr;
        for (const auto& c : cells) {
            bool open = false;
            for (int v : c)
                if (!((placed_mask >> v) & 1u)) {
                    open = true;
                    break;
                }
            if (open) {
                cell = &c;
                break;
            }
        }
        std::uint32_t tried_classes = 0;
        for (int v : *cell) {
            if ((placed_mask >> v) & 1u) continue;
            if ((tried_classes >> twin_class[v]) & 1u) continue;
            tried_classes |= std::uint32_t(1) << twin_class[v];

            const std::uint64_t save0 = cur0, save1 = cur1;
            const int save_bits = bits_used;
            for (int i = 0; i < placed; ++i) append_bit((rows[v] >> order[i]) & 1u);
            if (!prefix_beaten()) {
                order[placed] = v;
                placed_mask |= std::uint32_t(1) << v;
                ++placed;
                search();
                --placed;
                placed_mask &= ~(std::uint32_t(1) << v);
            }
            cur0 = save0;
            cur1 = save1;
            bits_used = save_bits;
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxN) throw std::invalid_argument("canonical_form: supported only for n <= 16");
    CanonicalForm out;
    out.n = n;
    if (n <= 1) return out;

    Minimizer m;
    m.n = n;
    m.rows.resize(n);
    for (int v = 0; v < n; ++v) m.rows[v] = static_cast<std::uint32_t>(g.row64(v));

    auto colors = refine_colors(m.rows, n);
    int ncells = *std::max_element(colors.begin(), colors.end()) + 1;
    m.cells.assign(ncells, {});
    for (int v = 0; v < n; ++v) m.cells[colors[v]].push_back(v);

    // twin classes: equal open or closed neighborhoods commute as swaps
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool false_twin = m.rows[u] == m.rows[v];
            bool true_twin = (m.rows[u] | (1u << u)) == (m.rows[v] | (1u << v));
            if (false_twin || true_twin) parent[find(u)] = find(v);
        }
    m.twin_class.resize(n);
    for (int v = 0; v < n; ++v) m.twin_class[v] = find(v);

    m.search();
    // repack: best bits are column-major upper-triangle, MSB-first
    out.bits[0] = m.best0;
    out.bits[1] = m.best1;
    const int total = n * (n - 1) / 2;
    if (total < 64)
        out.bits[0] &= ~0ULL << (64 - total), out.bits[1] = 0;
    else if (total < 128)
        out.bits[1] &= total == 64 ? 0 : ~0ULL << (128 - total);
    return out;
}

Graph canonical_graph(const CanonicalForm& c) {
    EdgeList edges;
    int k = 0;
    for (int j = 1; j < c.n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            bool bit = k < 64 ? (c.bits[0] >> (63 - k)) & 1u : (c.bits[1] >> (127 - k)) & 1u;
            if (bit) edges.emplace_back(i, j);
        }
    return Graph::from_edge_list(std::max(c.n, 1), edges);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace specgraph
