#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "dks/graph.hpp"

namespace dks {

// Contract for the exact solvers the deletion reduction can plug in. The
// applicability predicate gates the residual graph; solve must honor the
// SolveResult recomputation invariant. want_witness=false lets callers skip
// reconstruction while scanning candidates.
struct WeightedSolver {
    std::string name;
    std::function<bool(const Graph &)> applicable;
    std::function<SolveResult(const Graph &, const VertexWeights &, int, Objective, bool)> solve;
};

namespace detail {

struct Candidate {
    bool feasible = false;
    Value value = 0;
    std::uint64_t mask = 0;
};

inline bool candidate_better(Objective obj, const Candidate &a, const Candidate &b) {
    if (!b.feasible) return a.feasible;
    if (!a.feasible) return false;
    if (a.value != b.value) return obj == Objective::Densest ? a.value > b.value : a.value < b.value;
    return a.mask < b.mask;
}

} // namespace detail

// Reduction from Densest/Sparsest k-Subgraph to 2^|D| weighted instances on
// G[V \ D]: each candidate S <= D contributes |E(G[S])| plus a weighted solve
// where w_v = |N(v) and S| pays for the edges v adds towards S. Candidates
// are independent; with threads > 1 they are scanned in partitioned ranges
// and reduced deterministically (best value, ties to the smallest bitmask).
inline SolveResult solve_with_deletion_set(const Graph &g, const std::vector<int> &d, int k, Objective obj,
                                           const WeightedSolver &solver, int threads = 1) {
    if (k < 0 || k > g.n())
        fail(ErrorKind::KTooLarge, "k=" + std::to_string(k) + " with n=" + std::to_string(g.n()));
    std::vector<int> del(d);
    for (int v : del) g.check_vertex(v);
    std::sort(del.begin(), del.end());
    if (std::adjacent_find(del.begin(), del.end()) != del.end())
        fail(ErrorKind::InvalidDeletionSet, "repeated vertex in deletion set");
    if (del.size() > 30)
        fail(ErrorKind::DeletionSetTooLarge, std::to_string(del.size()) + " vertices (max 30)");

    InducedSubgraph residual = induced_subgraph(g, complement_set(g.n(), del));
    if (!solver.applicable(residual.graph))
        fail(ErrorKind::InvalidDeletionSet, "residual graph not accepted by solver " + solver.name);

    const int dn = static_cast<int>(del.size());
    const std::uint64_t mask_count = std::uint64_t{1} << dn;

    auto subset_of = [&](std::uint64_t mask) {
        std::vector<int> s;
        for (int i = 0; i < dn; ++i)
            if (mask >> i & 1) s.push_back(del[static_cast<std::size_t>(i)]);
        return s;
    };

    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < residual.original_ids.size(); ++i)
        local[static_cast<std::size_t>(residual.original_ids[i])] = static_cast<int>(i);

    // Residual weights for candidate S, then one weighted solve.
    auto evaluate_mask = [&](std::uint64_t mask, bool want_witness, SolveResult *out) -> detail::Candidate {
        std::vector<int> s = subset_of(mask);
        if (static_cast<int>(s.size()) > k) return {};
        int krest = k - static_cast<int>(s.size());
        if (krest > residual.graph.n()) return {};

        VertexWeights w(static_cast<std::size_t>(residual.graph.n()), 0);
        for (int sv : s)
            for (int u : g.neighbors(sv))
                if (local[static_cast<std::size_t>(u)] >= 0) ++w[static_cast<std::size_t>(local[static_cast<std::size_t>(u)])];

        SolveResult sub = solver.solve(residual.graph, w, krest, obj, want_witness);
        detail::Candidate c;
        c.feasible = true;
        c.mask = mask;
        c.value = edge_count_within(g, s) + sub.value;
        if (out != nullptr) {
            out->value = c.value;
            out->witness = s;
            for (int lv : sub.witness) out->witness.push_back(residual.original_ids[static_cast<std::size_t>(lv)]);
            std::sort(out->witness.begin(), out->witness.end());
        }
        return c;
    };

    detail::Candidate best;
    int workers = std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::uint64_t>(mask_count, 64))));
    if (workers == 1) {
        for (std::uint64_t mask = 0; mask < mask_count; ++mask) {
            detail::Candidate c = evaluate_mask(mask, false, nullptr);
            if (detail::candidate_better(obj, c, best)) best = c;
        }
    } else {
        std::vector<detail::Candidate> partial(static_cast<std::size_t>(workers));
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                detail::Candidate mine;
                for (std::uint64_t mask = static_cast<std::uint64_t>(t); mask < mask_count;
                     mask += static_cast<std::uint64_t>(workers)) {
                    detail::Candidate c = evaluate_mask(mask, false, nullptr);
                    if (detail::candidate_better(obj, c, mine)) mine = c;
                }
                partial[static_cast<std::size_t>(t)] = mine;
            });
        }
        for (auto &th : pool) th.join();
        for (const auto &c : partial)
            if (detail::candidate_better(obj, c, best)) best = c;
    }

    if (!best.feasible) fail(ErrorKind::KTooLarge, "no feasible candidate (internal)");

    SolveResult res;
    evaluate_mask(best.mask, true, &res);
    res.strategy = "deletion+" + solver.name;
    return res;
}

struct MaxKVertexCoverResult {
    Value covered_edges = 0;
    std::vector<int> cover;
    SolveResult sparsest; // the underlying Sparsest (n-k)-Subgraph result
};

// Maximum k-Vertex Cover through its Sparsest (n-k)-Subgraph dual: the
// complement of an optimal sparsest witness covers all edges but those
// inside the witness.
inline MaxKVertexCoverResult
max_k_vertex_cover(const Graph &g, int k,
                   const std::function<SolveResult(const Graph &, int, Objective)> &sparsest_solver) {
    if (k < 0 || k > g.n())
        fail(ErrorKind::KTooLarge, "k=" + std::to_string(k) + " with n=" + std::to_string(g.n()));
    MaxKVertexCoverResult out;
    out.sparsest = sparsest_solver(g, g.n() - k, Objective::Sparsest);
    out.cover = complement_set(g.n(), out.sparsest.witness);
    out.covered_edges = g.m() - out.sparsest.value;
    return out;
}

} // namespace dks
