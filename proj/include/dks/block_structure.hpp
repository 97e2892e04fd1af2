#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "dks/graph.hpp"
#include "dks/oracle.hpp"

namespace dks {

// Block-cut tree: block nodes are the biconnected components (isolated
// vertices become singleton blocks so every vertex lives in some block),
// cut nodes are single cut vertices. Within one connected component the
// structure is a tree; disconnected inputs yield one rooted tree each.
struct BlockCutTree {
    std::vector<std::vector<int>> block_nodes;      // sorted vertex sets, blocks in lex order
    std::vector<int> cut_nodes;                     // cut vertex ids, ascending
    std::vector<std::pair<int, int>> tree_edges;    // (block index, cut index)
    std::vector<int> roots;                         // one block index per component
    std::vector<int> component_index;               // vertex -> component id

    int block_of_component(int comp) const { return roots[static_cast<std::size_t>(comp)]; }
    std::size_t component_count() const { return roots.size(); }
};

inline BlockCutTree build_block_cut_tree(const Graph &g) {
    const int n = g.n();
    std::vector<int> disc(static_cast<std::size_t>(n), 0), low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    // Hopcroft-Tarjan with an explicit stack; recursion would overflow on
    // long paths.
    struct Frame {
        int v;
        int parent;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != 0) continue;
        if (g.degree(root) == 0) {
            disc[static_cast<std::size_t>(root)] = ++timer;
            blocks.push_back({root});
            continue;
        }
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = ++timer;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame &f = stack.back();
            const auto &nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                int u = nb[f.next++];
                if (u == f.parent) continue;
                if (disc[static_cast<std::size_t>(u)] == 0) {
                    edge_stack.emplace_back(f.v, u);
                    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = ++timer;
                    stack.push_back({u, f.v, 0});
                } else if (disc[static_cast<std::size_t>(u)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.emplace_back(f.v, u);
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(u)]);
                }
            } else {
                int child = f.v;
                int parent = f.parent;
                stack.pop_back();
                if (parent < 0) break;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(child)]);
                if (low[static_cast<std::size_t>(child)] >= disc[static_cast<std::size_t>(parent)]) {
                    // Pop the block hanging below edge (parent, child).
                    std::vector<int> verts;
                    while (!edge_stack.empty()) {
                        auto [a, b] = edge_stack.back();
                        edge_stack.pop_back();
                        verts.push_back(a);
                        verts.push_back(b);
                        if (a == parent && b == child) break;
                    }
                    std::sort(verts.begin(), verts.end());
                    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                    blocks.push_back(std::move(verts));
                }
            }
        }
    }

    std::sort(blocks.begin(), blocks.end());

    BlockCutTree t;
    t.block_nodes = std::move(blocks);

    // Components by union over block membership (blocks cover all vertices).
    t.component_index.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> membership_count(static_cast<std::size_t>(n), 0);
    {
        std::vector<int> parent(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (const auto &b : t.block_nodes) {
            for (int v : b) ++membership_count[static_cast<std::size_t>(v)];
            for (std::size_t i = 1; i < b.size(); ++i) {
                int a = find(b[0]), c = find(b[i]);
                if (a != c) parent[static_cast<std::size_t>(std::max(a, c))] = std::min(a, c);
            }
        }
        int next_comp = 0;
        std::vector<int> comp_of_root(static_cast<std::size_t>(n), -1);
        for (int v = 0; v < n; ++v) {
            int r = find(v);
            if (comp_of_root[static_cast<std::size_t>(r)] < 0) comp_of_root[static_cast<std::size_t>(r)] = next_comp++;
            t.component_index[static_cast<std::size_t>(v)] = comp_of_root[static_cast<std::size_t>(r)];
        }
        t.roots.assign(static_cast<std::size_t>(next_comp), -1);
    }

    std::vector<int> cut_index_of(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (membership_count[static_cast<std::size_t>(v)] >= 2) {
            cut_index_of[static_cast<std::size_t>(v)] = static_cast<int>(t.cut_nodes.size());
            t.cut_nodes.push_back(v);
        }
    }

    for (std::size_t bi = 0; bi < t.block_nodes.size(); ++bi) {
        for (int v : t.block_nodes[bi])
            if (cut_index_of[static_cast<std::size_t>(v)] >= 0)
                t.tree_edges.emplace_back(static_cast<int>(bi), cut_index_of[static_cast<std::size_t>(v)]);
        int comp = t.component_index[static_cast<std::size_t>(t.block_nodes[bi][0])];
        // Blocks are in lex order, so the first block seen per component is
        // the one containing the smallest vertex id: the root.
        if (t.roots[static_cast<std::size_t>(comp)] < 0) t.roots[static_cast<std::size_t>(comp)] = static_cast<int>(bi);
    }
    return t;
}

// A block graph is a graph whose blocks are all cliques.
inline bool is_block_graph(const Graph &g, const BlockCutTree &t) {
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (const auto &b : t.block_nodes) {
        for (int v : b) in[static_cast<std::size_t>(v)] = 1;
        std::int64_t inside = 0;
        for (int v : b)
            for (int u : g.neighbors(v))
                if (u > v && in[static_cast<std::size_t>(u)]) ++inside;
        for (int v : b) in[static_cast<std::size_t>(v)] = 0;
        std::int64_t want = static_cast<std::int64_t>(b.size()) * (static_cast<std::int64_t>(b.size()) - 1) / 2;
        if (inside != want) return false;
    }
    return true;
}

inline bool is_block_graph(const Graph &g) { return is_block_graph(g, build_block_cut_tree(g)); }

// Smallest D (|D| <= budget) whose removal leaves a block graph; subsets are
// tried in increasing size, lexicographic within a size, so the result is
// deterministic. Intended for desk scale (n <= ~25, bd <= ~6).
inline std::vector<int> find_min_block_deletion_set(const Graph &g, int budget) {
    if (budget < 0) fail(ErrorKind::InvalidSpec, "negative budget");
    if (budget > g.n()) fail(ErrorKind::BudgetTooLarge, "budget " + std::to_string(budget) +
                                                            " exceeds n=" + std::to_string(g.n()));
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;

    for (int size = 0; size <= budget; ++size) {
        std::vector<int> found;
        bool hit = false;
        for_each_k_subset(g.n(), size, [&](const std::vector<int> &d) {
            std::vector<int> keep = complement_set(g.n(), d);
            if (is_block_graph(induced_subgraph(g, keep).graph)) {
                found = d;
                hit = true;
                return false;
            }
            return true;
        });
        if (hit) return found;
    }
    fail(ErrorKind::NotFound, "no block deletion set within budget " + std::to_string(budget));
}

} // namespace dks
