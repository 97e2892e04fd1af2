#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dks/block_dp.hpp"
#include "dks/deletion.hpp"
#include "dks/graph.hpp"

namespace dks {

// Output of the deletion-set split 2-approximation for Densest k-Subgraph.
// result.value is the real edge count of the returned witness in g, so it
// sits between the winning branch candidate and OPT; 2*result.value >= OPT.
struct ApproxResult {
    enum class Branch { DisjointParts, Bipartite };

    SolveResult result;
    Branch winner = Branch::DisjointParts;
    Value disjoint_value = 0;  // exact optimum of G'' = (V, E1 u E2)
    Value bipartite_value = 0; // exact optimum of G' = (V, E \ (E1 u E2))
    Value opt_upper_bound = 0; // 2 * winning candidate
};

// Split the deletion set: V1 = floor(|d|/2) smallest ids, V2 = rest of V.
// G'' keeps the edges inside V1 and inside V2 (two independent exact solves
// joined by a knapsack over sizes); G' keeps the V1-V2 edges and is solved
// exactly through the deletion framework with deletion set V1 (an edgeless
// residual). The larger candidate is within factor 2 of OPT because the two
// edge sets partition E(g).
inline ApproxResult approx_densest(const Graph &g, const std::vector<int> &d, int k,
                                   const WeightedSolver &solver, int threads = 1) {
    if (k < 0 || k > g.n())
        fail(ErrorKind::KTooLarge, "k=" + std::to_string(k) + " with n=" + std::to_string(g.n()));
    std::vector<int> del(d);
    for (int v : del) g.check_vertex(v);
    std::sort(del.begin(), del.end());
    del.erase(std::unique(del.begin(), del.end()), del.end());
    {
        InducedSubgraph residual = induced_subgraph(g, complement_set(g.n(), del));
        if (!solver.applicable(residual.graph))
            fail(ErrorKind::SolverNotApplicable, "residual graph not accepted by solver " + solver.name);
    }

    std::vector<int> v1(del.begin(), del.begin() + static_cast<std::ptrdiff_t>(del.size() / 2));
    std::vector<char> in_v1(static_cast<std::size_t>(g.n()), 0);
    for (int v : v1) in_v1[static_cast<std::size_t>(v)] = 1;
    std::vector<int> v2 = complement_set(g.n(), v1);

    // Partition the edges; G' gets exactly the V1-V2 crossings.
    Graph bipart(g.n());
    std::int64_t e1 = 0, e2 = 0;
    for (auto [u, v] : g.edges()) {
        bool a = in_v1[static_cast<std::size_t>(u)], b = in_v1[static_cast<std::size_t>(v)];
        if (a != b)
            bipart.add_edge_unchecked(u, v);
        else if (a)
            ++e1;
        else
            ++e2;
    }
    bipart.finalize();
    if (e1 + e2 + bipart.m() != g.m()) fail(ErrorKind::InvalidSpec, "edge partition broken (internal)");

    // Deletion set for the V2 side of G'': what remains of d there.
    std::vector<int> d_in_v2;
    for (int v : del)
        if (!in_v1[static_cast<std::size_t>(v)]) d_in_v2.push_back(v);

    // Exact densest i-subgraph tables for g[V1] and g[V2], i = 0..k.
    InducedSubgraph side1 = induced_subgraph(g, v1);
    InducedSubgraph side2 = induced_subgraph(g, v2);
    std::vector<int> d2_local;
    {
        std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
        for (std::size_t i = 0; i < side2.original_ids.size(); ++i)
            local[static_cast<std::size_t>(side2.original_ids[i])] = static_cast<int>(i);
        for (int v : d_in_v2) d2_local.push_back(local[static_cast<std::size_t>(v)]);
    }
    std::vector<int> d1_local(static_cast<std::size_t>(side1.graph.n()));
    for (int i = 0; i < side1.graph.n(); ++i) d1_local[static_cast<std::size_t>(i)] = i;

    auto side_table = [&](const InducedSubgraph &side, const std::vector<int> &dloc, int cap,
                          std::vector<SolveResult> &per_size) {
        MergeTable t;
        t.vals.assign(static_cast<std::size_t>(cap) + 1, kNegSentinel);
        per_size.resize(static_cast<std::size_t>(cap) + 1);
        for (int i = 0; i <= cap && i <= side.graph.n(); ++i) {
            SolveResult r = solve_with_deletion_set(side.graph, dloc, i, Objective::Densest, solver, threads);
            for (int &w : r.witness) w = side.original_ids[static_cast<std::size_t>(w)];
            std::sort(r.witness.begin(), r.witness.end());
            t.vals[static_cast<std::size_t>(i)] = r.value;
            per_size[static_cast<std::size_t>(i)] = std::move(r);
        }
        return t;
    };

    std::vector<SolveResult> per1, per2;
    MergeTable t1 = side_table(side1, d1_local, std::min(k, side1.graph.n()), per1);
    MergeTable t2 = side_table(side2, d2_local, std::min(k, side2.graph.n()), per2);
    MergeTable combined = knapsack_merge(t1, t2, k, Objective::Densest);

    ApproxResult out;
    out.disjoint_value = combined.at(k);
    int best_i1 = -1;
    for (int i1 = 0; i1 < static_cast<int>(t1.vals.size()) && i1 <= k; ++i1) {
        int i2 = k - i1;
        if (i2 >= static_cast<int>(t2.vals.size())) continue;
        if (t1.at(i1) == kNegSentinel || t2.at(i2) == kNegSentinel) continue;
        if (t1.at(i1) + t2.at(i2) == out.disjoint_value) {
            best_i1 = i1;
            break;
        }
    }

    // Bipartite branch: V1 is a vertex cover of G', hence a valid deletion
    // set no matter which graph class the solver expects.
    SolveResult bip = solve_with_deletion_set(bipart, v1, k, Objective::Densest, solver, threads);
    out.bipartite_value = bip.value;

    std::vector<int> witness;
    if (out.bipartite_value > out.disjoint_value) {
        out.winner = ApproxResult::Branch::Bipartite;
        witness = bip.witness;
    } else {
        out.winner = ApproxResult::Branch::DisjointParts;
        witness = per1[static_cast<std::size_t>(best_i1)].witness;
        const auto &w2 = per2[static_cast<std::size_t>(k - best_i1)].witness;
        witness.insert(witness.end(), w2.begin(), w2.end());
        std::sort(witness.begin(), witness.end());
    }

    Value winning = std::max(out.disjoint_value, out.bipartite_value);
    out.opt_upper_bound = 2 * winning;
    out.result.value = edge_count_within(g, witness);
    out.result.witness = std::move(witness);
    out.result.strategy = "approx-split+" + solver.name;
    return out;
}

} // namespace dks
