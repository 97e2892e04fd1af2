#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dks/block_dp.hpp" // sentinel/Opt helpers
#include "dks/cw_expression.hpp"
#include "dks/graph.hpp"

namespace dks {

struct CwDpStats {
    std::size_t max_states_per_node = 0;
    int label_count = 0;
};

namespace detail {

// One DP table row: state = per-label counts (s_1..s_c) of chosen vertices,
// with l = sum s_i implied. Only reachable states are stored; anything absent
// is the sentinel. std::map keys give deterministic iteration.
struct CwEntry {
    Value val = 0;
    std::vector<int> from1; // child state (single-child ops, Union left)
    std::vector<int> from2; // Union right child state
};

using CwTable = std::map<std::vector<int>, CwEntry>;

inline int state_size(const std::vector<int> &s) {
    int total = 0;
    for (int x : s) total += x;
    return total;
}

} // namespace detail

// Densest/Sparsest k-Subgraph with Weighted Vertices on the graph realized
// by a c-expression, by DP over the expression tree. Weights are indexed by
// expression vertex ids. States per node stay within (k+1)^(c+1).
inline SolveResult solve_cw_weighted(const CwExpression &e, const VertexWeights &w, int k, Objective obj,
                                     CwDpStats *stats = nullptr) {
    const int n = e.vertex_count;
    if (k < 0 || k > n)
        fail(ErrorKind::KTooLarge, "k=" + std::to_string(k) + " with n=" + std::to_string(n));
    if (w.size() != static_cast<std::size_t>(n))
        fail(ErrorKind::WeightLengthMismatch,
             "weights length " + std::to_string(w.size()) + " for n=" + std::to_string(n));

    const int c = e.label_count();
    detail::Opt op{obj};
    std::vector<detail::CwTable> tables(e.nodes.size());
    std::size_t max_states = 0;

    // The s_i*s_j join increment is exact only when the expression never
    // re-joins pairs it partially joined before. Fully saturated re-joins add
    // nothing and are fine; partially saturated ones cannot be priced from
    // label counts alone, so they are rejected up front.
    std::vector<JoinKind> joins = audit_joins(e);
    for (std::size_t i = 0; i < joins.size(); ++i)
        if (joins[i] == JoinKind::Partial)
            fail(ErrorKind::SyntaxError,
                 "join node " + std::to_string(i) + " re-joins labels with some pairs already adjacent; "
                 "rewrite the expression so each join is irredundant");

    auto relax = [&](detail::CwTable &t, std::vector<int> key, Value val, const std::vector<int> *f1,
                     const std::vector<int> *f2) {
        auto it = t.find(key);
        if (it == t.end() || op.better(val, it->second.val)) {
            detail::CwEntry entry;
            entry.val = val;
            if (f1) entry.from1 = *f1;
            if (f2) entry.from2 = *f2;
            t[std::move(key)] = std::move(entry);
        }
    };

    std::vector<std::pair<int, bool>> stack = {{e.root, false}};
    while (!stack.empty()) {
        auto [node, expanded] = stack.back();
        stack.pop_back();
        const CwNode &nd = e.at(node);
        if (!expanded) {
            stack.emplace_back(node, true);
            if (nd.child >= 0) stack.emplace_back(nd.child, false);
            if (nd.child2 >= 0) stack.emplace_back(nd.child2, false);
            continue;
        }
        detail::CwTable &t = tables[static_cast<std::size_t>(node)];
        switch (nd.kind) {
        case CwNode::Kind::Introduce: {
            std::vector<int> zero(static_cast<std::size_t>(c), 0);
            relax(t, zero, 0, nullptr, nullptr);
            if (k >= 1) {
                std::vector<int> one(zero);
                one[static_cast<std::size_t>(nd.label_a - 1)] = 1;
                relax(t, one, w[static_cast<std::size_t>(nd.vertex)], nullptr, nullptr);
            }
            break;
        }
        case CwNode::Kind::Union: {
            auto &t1 = tables[static_cast<std::size_t>(nd.child)];
            auto &t2 = tables[static_cast<std::size_t>(nd.child2)];
            for (const auto &[s1, e1] : t1) {
                int l1 = detail::state_size(s1);
                for (const auto &[s2, e2] : t2) {
                    if (l1 + detail::state_size(s2) > k) continue;
                    std::vector<int> s(s1);
                    for (std::size_t i = 0; i < s.size(); ++i) s[i] += s2[i];
                    relax(t, std::move(s), e1.val + e2.val, &s1, &s2);
                }
            }
            break;
        }
        case CwNode::Kind::Join: {
            auto &tc = tables[static_cast<std::size_t>(nd.child)];
            bool saturated = joins[static_cast<std::size_t>(node)] == JoinKind::Saturated;
            // s_i * s_j new edges appear in every state, both objectives.
            for (const auto &[s, en] : tc) {
                Value extra = saturated ? 0
                                        : static_cast<Value>(s[static_cast<std::size_t>(nd.label_a - 1)]) *
                                              s[static_cast<std::size_t>(nd.label_b - 1)];
                relax(t, s, en.val + extra, &s, nullptr);
            }
            break;
        }
        case CwNode::Kind::Relabel: {
            auto &tc = tables[static_cast<std::size_t>(nd.child)];
            for (const auto &[s, en] : tc) {
                std::vector<int> ns(s);
                ns[static_cast<std::size_t>(nd.label_b - 1)] += ns[static_cast<std::size_t>(nd.label_a - 1)];
                ns[static_cast<std::size_t>(nd.label_a - 1)] = 0;
                relax(t, std::move(ns), en.val, &s, nullptr);
            }
            break;
        }
        }
        max_states = std::max(max_states, t.size());
    }

    if (stats) {
        stats->max_states_per_node = max_states;
        stats->label_count = c;
    }

    const detail::CwTable &root = tables[static_cast<std::size_t>(e.root)];
    const std::vector<int> *best_state = nullptr;
    Value best = op.sent();
    for (const auto &[s, en] : root) {
        if (detail::state_size(s) != k) continue;
        if (best_state == nullptr || op.better(en.val, best)) {
            best_state = &s;
            best = en.val;
        }
    }
    if (best_state == nullptr) fail(ErrorKind::KTooLarge, "no state of size k at root (internal)");

    SolveResult res;
    res.value = best;
    res.strategy = "cw-dp";

    // Walk the backpointers down; introduce nodes reached with a nonzero
    // state contribute their vertex.
    struct Visit {
        int node;
        std::vector<int> state;
    };
    std::vector<Visit> down = {{e.root, *best_state}};
    while (!down.empty()) {
        Visit v = std::move(down.back());
        down.pop_back();
        const CwNode &nd = e.at(v.node);
        const detail::CwEntry &en = tables[static_cast<std::size_t>(v.node)].at(v.state);
        switch (nd.kind) {
        case CwNode::Kind::Introduce:
            if (detail::state_size(v.state) == 1) res.witness.push_back(nd.vertex);
            break;
        case CwNode::Kind::Union:
            down.push_back({nd.child, en.from1});
            down.push_back({nd.child2, en.from2});
            break;
        case CwNode::Kind::Join:
        case CwNode::Kind::Relabel:
            down.push_back({nd.child, en.from1});
            break;
        }
    }
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

} // namespace dks
