#pragma once

#include "dks/block_dp.hpp"
#include "dks/cw_dp.hpp"
#include "dks/cw_expression.hpp"
#include "dks/deletion.hpp"
#include "dks/oracle.hpp"

namespace dks {

inline WeightedSolver block_dp_solver() {
    WeightedSolver s;
    s.name = "block-dp";
    s.applicable = [](const Graph &g) { return is_block_graph(g); };
    s.solve = [](const Graph &g, const VertexWeights &w, int k, Objective obj, bool want_witness) {
        return solve_block_weighted(g, w, k, obj, want_witness);
    };
    return s;
}

// Residuals handled by building a 2-label expression, so the predicate is
// cograph membership. Witnesses and weights go through the id map the
// decomposition records.
inline WeightedSolver cw_dp_solver() {
    WeightedSolver s;
    s.name = "cw-dp";
    s.applicable = [](const Graph &g) { return is_cograph(g); };
    s.solve = [](const Graph &g, const VertexWeights &w, int k, Objective obj, bool) {
        if (g.n() == 0) {
            SolveResult r;
            r.strategy = "cw-dp";
            return r;
        }
        CographExpression ce = cograph_to_expression(g);
        VertexWeights we(static_cast<std::size_t>(g.n()), 0);
        for (int v = 0; v < g.n(); ++v)
            we[static_cast<std::size_t>(v)] = w[static_cast<std::size_t>(ce.vertex_map[static_cast<std::size_t>(v)])];
        SolveResult r = solve_cw_weighted(ce.expr, we, k, obj);
        for (int &v : r.witness) v = ce.vertex_map[static_cast<std::size_t>(v)];
        std::sort(r.witness.begin(), r.witness.end());
        return r;
    };
    return s;
}

inline WeightedSolver oracle_solver(int max_n = 20) {
    WeightedSolver s;
    s.name = "oracle";
    s.applicable = [max_n](const Graph &g) { return g.n() <= max_n; };
    s.solve = [](const Graph &g, const VertexWeights &w, int k, Objective obj, bool) {
        return brute_force_solve(g, w, k, obj);
    };
    return s;
}

} // namespace dks
