#pragma once

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "dks/block_structure.hpp"
#include "dks/graph.hpp"

namespace dks {

inline constexpr Value kNegSentinel = std::numeric_limits<Value>::min() / 4;
inline constexpr Value kPosSentinel = std::numeric_limits<Value>::max() / 4;

inline Value sentinel_for(Objective obj) {
    return obj == Objective::Densest ? kNegSentinel : kPosSentinel;
}

namespace detail {

// max/min folded behind one face so every recurrence is written once.
struct Opt {
    Objective obj;
    Value sent() const { return sentinel_for(obj); }
    bool is_sent(Value v) const { return v == sent(); }
    bool better(Value a, Value b) const { return obj == Objective::Densest ? a > b : a < b; }
    Value add(Value a, Value b) const { return (is_sent(a) || is_sent(b)) ? sent() : a + b; }
    void relax(Value &slot, Value cand) const {
        if (!is_sent(cand) && (is_sent(slot) || better(cand, slot))) slot = cand;
    }
};

} // namespace detail

// Value per subgraph size 0..cap; entries holding the objective's sentinel
// are unreachable sizes.
struct MergeTable {
    std::vector<Value> vals;

    static MergeTable zero_only(int cap, Objective obj) {
        MergeTable t;
        t.vals.assign(static_cast<std::size_t>(cap) + 1, sentinel_for(obj));
        t.vals[0] = 0;
        return t;
    }
    int cap() const { return static_cast<int>(vals.size()) - 1; }
    Value at(int i) const { return vals[static_cast<std::size_t>(i)]; }
};

// out[l] = opt over l'+l''=l of a[l'] + b[l''], sentinel-absorbing. Inputs
// shorter than cap+1 are treated as sentinel beyond their length.
inline MergeTable knapsack_merge(const MergeTable &a, const MergeTable &b, int cap, Objective obj) {
    detail::Opt op{obj};
    MergeTable out;
    out.vals.assign(static_cast<std::size_t>(cap) + 1, op.sent());
    for (int i = 0; i < static_cast<int>(a.vals.size()) && i <= cap; ++i) {
        if (op.is_sent(a.vals[static_cast<std::size_t>(i)])) continue;
        for (int j = 0; j < static_cast<int>(b.vals.size()) && i + j <= cap; ++j)
            op.relax(out.vals[static_cast<std::size_t>(i + j)],
                     op.add(a.vals[static_cast<std::size_t>(i)], b.vals[static_cast<std::size_t>(j)]));
    }
    return out;
}

namespace detail {

// Rooted view of the block-cut forest. Node ids: 0..B-1 block nodes, then
// B..B+C-1 cut nodes.
struct RootedBct {
    BlockCutTree bct;
    int block_count = 0;
    std::vector<std::vector<int>> children; // sorted child node ids
    std::vector<int> parent;                // -1 at roots
    std::vector<int> subtree_vertices;      // |V_i|
    std::vector<int> post_order;            // children precede parents
    std::vector<int> cut_node_of_vertex;    // vertex -> cut node id or -1

    bool is_block(int node) const { return node < block_count; }
    int cut_vertex(int node) const { return bct.cut_nodes[static_cast<std::size_t>(node - block_count)]; }
    const std::vector<int> &block_vertices(int node) const {
        return bct.block_nodes[static_cast<std::size_t>(node)];
    }
    bool is_root(int node) const { return parent[static_cast<std::size_t>(node)] < 0; }
    int parent_cut_vertex(int node) const { return cut_vertex(parent[static_cast<std::size_t>(node)]); }
};

inline RootedBct build_rooted_bct(BlockCutTree bct, int n) {
    RootedBct r;
    r.block_count = static_cast<int>(bct.block_nodes.size());
    int total = r.block_count + static_cast<int>(bct.cut_nodes.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
    for (auto [b, c] : bct.tree_edges) {
        adj[static_cast<std::size_t>(b)].push_back(r.block_count + c);
        adj[static_cast<std::size_t>(r.block_count + c)].push_back(b);
    }
    for (auto &a : adj) std::sort(a.begin(), a.end());

    r.cut_node_of_vertex.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < bct.cut_nodes.size(); ++c)
        r.cut_node_of_vertex[static_cast<std::size_t>(bct.cut_nodes[c])] = r.block_count + static_cast<int>(c);

    r.bct = std::move(bct);
    r.children.assign(static_cast<std::size_t>(total), {});
    r.parent.assign(static_cast<std::size_t>(total), -1);
    r.subtree_vertices.assign(static_cast<std::size_t>(total), 0);
    r.post_order.reserve(static_cast<std::size_t>(total));

    std::vector<std::pair<int, bool>> stack; // (node, expanded)
    for (int root : r.bct.roots) {
        stack.emplace_back(root, false);
        while (!stack.empty()) {
            auto [node, expanded] = stack.back();
            stack.pop_back();
            if (expanded) {
                r.post_order.push_back(node);
                continue;
            }
            stack.emplace_back(node, true);
            for (int nb : adj[static_cast<std::size_t>(node)]) {
                if (nb == r.parent[static_cast<std::size_t>(node)]) continue;
                r.parent[static_cast<std::size_t>(nb)] = node;
                r.children[static_cast<std::size_t>(node)].push_back(nb);
                stack.emplace_back(nb, false);
            }
        }
    }
    for (int node : r.post_order) {
        int sub;
        if (r.is_block(node)) {
            sub = static_cast<int>(r.block_vertices(node).size());
            for (int c : r.children[static_cast<std::size_t>(node)])
                sub += r.subtree_vertices[static_cast<std::size_t>(c)] - 1; // child cut vertex already counted in the block
        } else {
            sub = 1;
            for (int c : r.children[static_cast<std::size_t>(node)])
                sub += r.subtree_vertices[static_cast<std::size_t>(c)] - 1; // v shared with each child block
        }
        r.subtree_vertices[static_cast<std::size_t>(node)] = sub;
    }
    return r;
}

// Per-node tables: best value of an l-subgraph of G[V_i], split on whether
// the node's distinguished vertex (parent cut vertex for block nodes, own
// vertex for cut nodes) is in the solution (p1) or not (p0). Root blocks
// fill only p0, which then ranges over all of V_i including every vertex.
struct NodeTable {
    std::vector<Value> p0;
    std::vector<Value> p1; // index 0 stays sentinel
};

// Candidate contributions of one block member to the inner block DP:
// (subtree vertices used, value) pairs for "not chosen" / "chosen".
struct MemberSpots {
    int vertex = -1;
    int child_node = -1; // cut node hanging below this block, or -1
    std::vector<std::pair<int, Value>> not_taken;
    std::vector<std::pair<int, Value>> taken;
};

struct BlockDpContext {
    const Graph &g;
    const VertexWeights &w;
    int k;
    Opt op;
    RootedBct tree;
    std::vector<NodeTable> tables;

    int cap_of(int node, bool with_distinguished) const {
        int avail = tree.subtree_vertices[static_cast<std::size_t>(node)] - (with_distinguished ? 0 : 1);
        return std::min(k, std::max(avail, 0));
    }
    bool is_leaf_block(int node) const {
        return tree.is_block(node) && !tree.is_root(node) && tree.children[static_cast<std::size_t>(node)].empty();
    }
    // Non-parent members of a leaf block, best weight first (descending for
    // Densest, ascending for Sparsest, ids breaking ties).
    std::vector<int> leaf_order(int node) const {
        int pv = tree.parent_cut_vertex(node);
        std::vector<int> us;
        for (int v : tree.block_vertices(node))
            if (v != pv) us.push_back(v);
        std::stable_sort(us.begin(), us.end(), [&](int a, int b) {
            Value wa = w[static_cast<std::size_t>(a)], wb = w[static_cast<std::size_t>(b)];
            if (wa != wb) return op.obj == Objective::Densest ? wa > wb : wa < wb;
            return a < b;
        });
        return us;
    }
};

inline std::vector<MemberSpots> block_member_spots(const BlockDpContext &ctx, int node) {
    const auto &tree = ctx.tree;
    int parent_cut = tree.is_root(node) ? -1 : tree.parent_cut_vertex(node);
    std::vector<MemberSpots> members;
    for (int v : tree.block_vertices(node)) {
        if (v == parent_cut) continue;
        MemberSpots ms;
        ms.vertex = v;
        int cn = tree.cut_node_of_vertex[static_cast<std::size_t>(v)];
        if (cn >= 0 && tree.parent[static_cast<std::size_t>(cn)] == node) ms.child_node = cn;
        if (ms.child_node < 0) {
            ms.not_taken = {{0, 0}};
            ms.taken = {{1, ctx.w[static_cast<std::size_t>(v)]}};
        } else {
            const NodeTable &ct = ctx.tables[static_cast<std::size_t>(ms.child_node)];
            for (int l = 0; l < static_cast<int>(ct.p0.size()); ++l)
                if (!ctx.op.is_sent(ct.p0[static_cast<std::size_t>(l)]))
                    ms.not_taken.emplace_back(l, ct.p0[static_cast<std::size_t>(l)]);
            for (int l = 1; l < static_cast<int>(ct.p1.size()); ++l)
                if (!ctx.op.is_sent(ct.p1[static_cast<std::size_t>(l)]))
                    ms.taken.emplace_back(l, ct.p1[static_cast<std::size_t>(l)]);
        }
        members.push_back(std::move(ms));
    }
    return members;
}

// Inner DP over the members of one block: a[j][alpha][l] = best value with
// the first j members considered, alpha of them chosen, l vertices in total
// (members plus their subtrees; the parent cut vertex never counted here).
// Clique edges inside the block are added by the caller. When slices is
// given, the slice after each j is kept for backtracking.
inline std::vector<Value> block_inner_dp(const BlockDpContext &ctx, const std::vector<MemberSpots> &members,
                                         int cap, int amax, std::vector<std::vector<Value>> *slices) {
    const Opt &op = ctx.op;
    auto idx = [cap](int alpha, int l) { return static_cast<std::size_t>(alpha) * (cap + 1) + static_cast<std::size_t>(l); };
    std::vector<Value> cur(static_cast<std::size_t>(amax + 1) * (cap + 1), op.sent());
    cur[idx(0, 0)] = 0;
    if (slices) slices->push_back(cur);

    for (const MemberSpots &ms : members) {
        std::vector<Value> next(cur.size(), op.sent());
        for (int alpha = 0; alpha <= amax; ++alpha) {
            for (int l = 0; l <= cap; ++l) {
                Value base = cur[idx(alpha, l)];
                if (op.is_sent(base)) continue;
                for (auto [len, val] : ms.not_taken) {
                    if (l + len > cap) break;
                    op.relax(next[idx(alpha, l + len)], base + val);
                }
                if (alpha + 1 <= amax)
                    for (auto [len, val] : ms.taken) {
                        if (l + len > cap) break;
                        op.relax(next[idx(alpha + 1, l + len)], base + val);
                    }
            }
        }
        cur = std::move(next);
        if (slices) slices->push_back(cur);
    }
    return cur;
}

// Leaf blocks reduce to prefix sums over weight-sorted members: an l-subset
// of a clique always induces l(l-1)/2 edges, so only the weight sum varies.
inline void compute_leaf_block_table(BlockDpContext &ctx, int node) {
    const Opt &op = ctx.op;
    std::vector<int> us = ctx.leaf_order(node);
    int v = ctx.tree.parent_cut_vertex(node);
    std::vector<Value> pre(us.size() + 1, 0);
    for (std::size_t i = 0; i < us.size(); ++i)
        pre[i + 1] = pre[i] + ctx.w[static_cast<std::size_t>(us[i])];

    int cap0 = ctx.cap_of(node, false), cap1 = ctx.cap_of(node, true);
    NodeTable t;
    t.p0.assign(static_cast<std::size_t>(cap0) + 1, op.sent());
    t.p1.assign(static_cast<std::size_t>(cap1) + 1, op.sent());
    for (int l = 0; l <= cap0; ++l)
        t.p0[static_cast<std::size_t>(l)] = static_cast<Value>(l) * (l - 1) / 2 + pre[static_cast<std::size_t>(l)];
    for (int l = 1; l <= cap1; ++l)
        t.p1[static_cast<std::size_t>(l)] = static_cast<Value>(l) * (l - 1) / 2 +
                                            pre[static_cast<std::size_t>(l - 1)] + ctx.w[static_cast<std::size_t>(v)];
    ctx.tables[static_cast<std::size_t>(node)] = std::move(t);
}

inline void compute_block_table(BlockDpContext &ctx, int node) {
    if (ctx.is_leaf_block(node)) {
        compute_leaf_block_table(ctx, node);
        return;
    }
    const Opt &op = ctx.op;
    bool root = ctx.tree.is_root(node);
    int cap0 = ctx.cap_of(node, root);
    auto members = block_member_spots(ctx, node);
    int amax = std::min<int>(static_cast<int>(members.size()), cap0);
    auto a = block_inner_dp(ctx, members, cap0, amax, nullptr);
    auto idx = [cap0](int alpha, int l) { return static_cast<std::size_t>(alpha) * (cap0 + 1) + static_cast<std::size_t>(l); };

    NodeTable t;
    t.p0.assign(static_cast<std::size_t>(cap0) + 1, op.sent());
    for (int l = 0; l <= cap0; ++l)
        for (int alpha = 0; alpha <= amax && alpha <= l; ++alpha)
            op.relax(t.p0[static_cast<std::size_t>(l)],
                     op.add(a[idx(alpha, l)], static_cast<Value>(alpha) * (alpha - 1) / 2));
    if (!root) {
        int v = ctx.tree.parent_cut_vertex(node);
        int cap1 = ctx.cap_of(node, true);
        t.p1.assign(static_cast<std::size_t>(cap1) + 1, op.sent());
        for (int l = 1; l <= cap1; ++l)
            for (int alpha = 0; alpha <= amax && alpha <= l - 1; ++alpha)
                // alpha chosen block vertices are all joined to v.
                op.relax(t.p1[static_cast<std::size_t>(l)],
                         op.add(a[idx(alpha, l - 1)],
                                static_cast<Value>(alpha) * (alpha + 1) / 2 + ctx.w[static_cast<std::size_t>(v)]));
    } else {
        t.p1.assign(1, op.sent());
    }
    ctx.tables[static_cast<std::size_t>(node)] = std::move(t);
}

// Fold the child blocks of a cut node. For p=1 every child table already
// counts v and w_v, so sizes combine as l'+l''-1 and one w_v is subtracted
// per merge step.
inline void compute_cut_table(BlockDpContext &ctx, int node, std::vector<NodeTable> *keep_partials) {
    const Opt &op = ctx.op;
    int v = ctx.tree.cut_vertex(node);
    Value wv = ctx.w[static_cast<std::size_t>(v)];
    const auto &kids = ctx.tree.children[static_cast<std::size_t>(node)];

    NodeTable acc = ctx.tables[static_cast<std::size_t>(kids[0])];
    if (keep_partials) keep_partials->push_back(acc);
    int cap0 = ctx.cap_of(node, false), cap1 = ctx.cap_of(node, true);
    for (std::size_t s = 1; s < kids.size(); ++s) {
        const NodeTable &ct = ctx.tables[static_cast<std::size_t>(kids[s])];
        NodeTable merged;
        merged.p0.assign(static_cast<std::size_t>(cap0) + 1, op.sent());
        merged.p1.assign(static_cast<std::size_t>(cap1) + 1, op.sent());
        for (int l1 = 0; l1 < static_cast<int>(ct.p0.size()); ++l1) {
            if (op.is_sent(ct.p0[static_cast<std::size_t>(l1)])) continue;
            for (int l2 = 0; l2 < static_cast<int>(acc.p0.size()) && l1 + l2 <= cap0; ++l2)
                op.relax(merged.p0[static_cast<std::size_t>(l1 + l2)],
                         op.add(ct.p0[static_cast<std::size_t>(l1)], acc.p0[static_cast<std::size_t>(l2)]));
        }
        for (int l1 = 1; l1 < static_cast<int>(ct.p1.size()); ++l1) {
            if (op.is_sent(ct.p1[static_cast<std::size_t>(l1)])) continue;
            for (int l2 = 1; l2 < static_cast<int>(acc.p1.size()) && l1 + l2 - 1 <= cap1; ++l2) {
                Value sum = op.add(ct.p1[static_cast<std::size_t>(l1)], acc.p1[static_cast<std::size_t>(l2)]);
                if (!op.is_sent(sum)) sum -= wv;
                op.relax(merged.p1[static_cast<std::size_t>(l1 + l2 - 1)], sum);
            }
        }
        acc = std::move(merged);
        if (keep_partials) keep_partials->push_back(acc);
    }
    acc.p0.resize(static_cast<std::size_t>(cap0) + 1, op.sent());
    acc.p1.resize(static_cast<std::size_t>(cap1) + 1, op.sent());
    ctx.tables[static_cast<std::size_t>(node)] = std::move(acc);
}

// ---- witness reconstruction ------------------------------------------------
//
// Forward tables keep only per-node values; the inner DP slices and cut-node
// partial folds are recomputed for the nodes the chosen solution actually
// touches. Each node is revisited at most once, so reconstruction costs no
// more than a second forward pass.

struct PendingNode {
    int node;
    int p;
    int l;
};

inline void reconstruct_leaf_block(BlockDpContext &ctx, const PendingNode &pn, std::vector<char> &chosen) {
    std::vector<int> us = ctx.leaf_order(pn.node);
    int take = pn.l;
    if (pn.p) {
        chosen[static_cast<std::size_t>(ctx.tree.parent_cut_vertex(pn.node))] = 1;
        --take;
    }
    for (int i = 0; i < take; ++i) chosen[static_cast<std::size_t>(us[static_cast<std::size_t>(i)])] = 1;
}

inline void reconstruct_block(BlockDpContext &ctx, const PendingNode &pn, std::vector<char> &chosen,
                              std::vector<PendingNode> &queue) {
    if (ctx.is_leaf_block(pn.node)) {
        reconstruct_leaf_block(ctx, pn, chosen);
        return;
    }
    const Opt &op = ctx.op;
    int node = pn.node;
    bool root = ctx.tree.is_root(node);
    int cap0 = ctx.cap_of(node, root);
    auto members = block_member_spots(ctx, node);
    int amax = std::min<int>(static_cast<int>(members.size()), cap0);
    std::vector<std::vector<Value>> slices;
    block_inner_dp(ctx, members, cap0, amax, &slices);
    auto at = [&](std::size_t j, int alpha, int l) -> Value {
        return slices[j][static_cast<std::size_t>(alpha) * (cap0 + 1) + static_cast<std::size_t>(l)];
    };

    const NodeTable &t = ctx.tables[static_cast<std::size_t>(node)];
    Value want = (pn.p ? t.p1 : t.p0)[static_cast<std::size_t>(pn.l)];
    int alpha = -1, l = pn.p ? pn.l - 1 : pn.l;
    for (int a = 0; a <= amax && a <= l; ++a) {
        Value base = at(members.size(), a, l);
        Value edges = pn.p ? static_cast<Value>(a) * (a + 1) / 2 + ctx.w[static_cast<std::size_t>(ctx.tree.parent_cut_vertex(node))]
                           : static_cast<Value>(a) * (a - 1) / 2;
        if (!op.is_sent(base) && base + edges == want) {
            alpha = a;
            break;
        }
    }
    if (alpha < 0) fail(ErrorKind::InvalidSpec, "backtrack lost the inner DP state (internal)");
    if (pn.p) chosen[static_cast<std::size_t>(ctx.tree.parent_cut_vertex(node))] = 1;

    for (std::size_t j = members.size(); j-- > 0;) {
        const MemberSpots &ms = members[j];
        Value cur = at(j + 1, alpha, l);
        bool matched = false;
        for (auto [len, val] : ms.not_taken) {
            if (len > l) break;
            Value prev = at(j, alpha, l - len);
            if (!op.is_sent(prev) && prev + val == cur) {
                if (ms.child_node >= 0 && len > 0) queue.push_back({ms.child_node, 0, len});
                l -= len;
                matched = true;
                break;
            }
        }
        if (!matched && alpha > 0) {
            for (auto [len, val] : ms.taken) {
                if (len > l) break;
                Value prev = at(j, alpha - 1, l - len);
                if (!op.is_sent(prev) && prev + val == cur) {
                    chosen[static_cast<std::size_t>(ms.vertex)] = 1;
                    if (ms.child_node >= 0) queue.push_back({ms.child_node, 1, len});
                    l -= len;
                    --alpha;
                    matched = true;
                    break;
                }
            }
        }
    }
}

inline void reconstruct_cut(BlockDpContext &ctx, const PendingNode &pn, std::vector<char> &chosen,
                            std::vector<PendingNode> &queue) {
    const Opt &op = ctx.op;
    int v = ctx.tree.cut_vertex(pn.node);
    Value wv = ctx.w[static_cast<std::size_t>(v)];
    const auto &kids = ctx.tree.children[static_cast<std::size_t>(pn.node)];
    std::vector<NodeTable> partials;
    compute_cut_table(ctx, pn.node, &partials);
    if (pn.p) chosen[static_cast<std::size_t>(v)] = 1;

    int l = pn.l;
    for (std::size_t s = kids.size(); s-- > 1;) {
        const NodeTable &ct = ctx.tables[static_cast<std::size_t>(kids[s])];
        const NodeTable &prev = partials[s - 1];
        const std::vector<Value> &row = pn.p ? partials[s].p1 : partials[s].p0;
        Value cur = row[static_cast<std::size_t>(l)];
        bool matched = false;
        if (pn.p == 0) {
            for (int l1 = 0; l1 < static_cast<int>(ct.p0.size()) && l1 <= l && !matched; ++l1) {
                int l2 = l - l1;
                if (l2 >= static_cast<int>(prev.p0.size())) continue;
                Value cand = op.add(ct.p0[static_cast<std::size_t>(l1)], prev.p0[static_cast<std::size_t>(l2)]);
                if (!op.is_sent(cand) && cand == cur) {
                    if (l1 > 0) queue.push_back({kids[s], 0, l1});
                    l = l2;
                    matched = true;
                }
            }
        } else {
            for (int l1 = 1; l1 < static_cast<int>(ct.p1.size()) && l1 <= l && !matched; ++l1) {
                int l2 = l + 1 - l1;
                if (l2 < 1 || l2 >= static_cast<int>(prev.p1.size())) continue;
                Value cand = op.add(ct.p1[static_cast<std::size_t>(l1)], prev.p1[static_cast<std::size_t>(l2)]);
                if (!op.is_sent(cand) && cand - wv == cur) {
                    queue.push_back({kids[s], 1, l1});
                    l = l2;
                    matched = true;
                }
            }
        }
    }
    queue.push_back({kids[0], pn.p, l});
}

} // namespace detail

// Exact Densest/Sparsest k-Subgraph with Weighted Vertices on block graphs:
// dynamic programming over the rooted block-cut forest with a final knapsack
// across connected components. O(k^3 n + m) time.
inline SolveResult solve_block_weighted(const Graph &g, const VertexWeights &w, int k, Objective obj,
                                        bool want_witness = true) {
    if (k < 0 || k > g.n())
        fail(ErrorKind::KTooLarge, "k=" + std::to_string(k) + " with n=" + std::to_string(g.n()));
    if (w.size() != static_cast<std::size_t>(g.n()))
        fail(ErrorKind::WeightLengthMismatch, "weights length " + std::to_string(w.size()) +
                                                  " for n=" + std::to_string(g.n()));

    if (g.n() == 0) {
        SolveResult empty;
        empty.strategy = "block-dp";
        return empty;
    }

    BlockCutTree bct = build_block_cut_tree(g);
    if (!is_block_graph(g, bct)) fail(ErrorKind::NotBlockGraph, "some block is not a clique");

    detail::Opt op{obj};
    detail::BlockDpContext ctx{g, w, k, op, detail::build_rooted_bct(std::move(bct), g.n()), {}};
    ctx.tables.resize(ctx.tree.children.size());

    for (int node : ctx.tree.post_order) {
        if (ctx.tree.is_block(node))
            detail::compute_block_table(ctx, node);
        else
            detail::compute_cut_table(ctx, node, nullptr);
    }

    // B[i][l] = best split of l among the first i component roots.
    const auto &roots = ctx.tree.bct.roots;
    std::vector<MergeTable> folds;
    MergeTable acc;
    acc.vals = ctx.tables[static_cast<std::size_t>(roots[0])].p0;
    folds.push_back(acc);
    for (std::size_t i = 1; i < roots.size(); ++i) {
        MergeTable rt;
        rt.vals = ctx.tables[static_cast<std::size_t>(roots[i])].p0;
        acc = knapsack_merge(acc, rt, k, obj);
        folds.push_back(acc);
    }

    SolveResult res;
    res.strategy = "block-dp";
    res.value = acc.vals[static_cast<std::size_t>(k)];
    if (!want_witness) return res;

    std::vector<int> per_root(roots.size(), 0);
    {
        int l = k;
        for (std::size_t i = roots.size(); i-- > 1;) {
            const std::vector<Value> &rt = ctx.tables[static_cast<std::size_t>(roots[i])].p0;
            Value cur = folds[i].vals[static_cast<std::size_t>(l)];
            for (int l1 = 0; l1 < static_cast<int>(rt.size()) && l1 <= l; ++l1) {
                int l2 = l - l1;
                if (l2 >= static_cast<int>(folds[i - 1].vals.size())) continue;
                Value cand = op.add(rt[static_cast<std::size_t>(l1)], folds[i - 1].vals[static_cast<std::size_t>(l2)]);
                if (!op.is_sent(cand) && cand == cur) {
                    per_root[i] = l1;
                    l = l2;
                    break;
                }
            }
        }
        per_root[0] = l;
    }

    std::vector<char> chosen(static_cast<std::size_t>(g.n()), 0);
    std::vector<detail::PendingNode> queue;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (per_root[i] > 0) queue.push_back({roots[i], 0, per_root[i]});
    while (!queue.empty()) {
        detail::PendingNode pn = queue.back();
        queue.pop_back();
        if (pn.l == 0 && pn.p == 0) continue;
        if (ctx.tree.is_block(pn.node))
            detail::reconstruct_block(ctx, pn, chosen, queue);
        else
            detail::reconstruct_cut(ctx, pn, chosen, queue);
    }
    for (int v = 0; v < g.n(); ++v)
        if (chosen[static_cast<std::size_t>(v)]) res.witness.push_back(v);
    return res;
}

inline SolveResult solve_block_weighted(const Graph &g, int k, Objective obj) {
    return solve_block_weighted(g, VertexWeights(static_cast<std::size_t>(g.n()), 0), k, obj);
}

} // namespace dks
