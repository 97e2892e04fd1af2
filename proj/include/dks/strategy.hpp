#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dks/approx.hpp"
#include "dks/block_dp.hpp"
#include "dks/cw_dp.hpp"
#include "dks/cw_expression.hpp"
#include "dks/deletion.hpp"
#include "dks/nd_iqp.hpp"
#include "dks/oracle.hpp"
#include "dks/solvers.hpp"

namespace dks {

enum class StrategyKind { Oracle, BlockDP, DeletionBlock, DeletionCw, NdEnum, ApproxSplit };

struct Strategy {
    StrategyKind kind = StrategyKind::Oracle;
    std::vector<int> deletion_set;          // DeletionBlock / DeletionCw / ApproxSplit
    std::optional<CwExpression> expression; // DeletionCw: user expression for the residual
    int threads = 1;
};

inline const char *strategy_kind_name(StrategyKind k) {
    switch (k) {
    case StrategyKind::Oracle: return "oracle";
    case StrategyKind::BlockDP: return "block-dp";
    case StrategyKind::DeletionBlock: return "deletion-block";
    case StrategyKind::DeletionCw: return "deletion-cw";
    case StrategyKind::NdEnum: return "nd-enum";
    case StrategyKind::ApproxSplit: return "approx-split";
    }
    return "?";
}

inline StrategyKind parse_strategy_kind(const std::string &name) {
    for (StrategyKind k : {StrategyKind::Oracle, StrategyKind::BlockDP, StrategyKind::DeletionBlock,
                           StrategyKind::DeletionCw, StrategyKind::NdEnum, StrategyKind::ApproxSplit})
        if (name == strategy_kind_name(k)) return k;
    fail(ErrorKind::StrategyNotApplicable, "unknown strategy \"" + name + "\"");
}

namespace detail {

inline bool all_zero(const VertexWeights &w) {
    return std::all_of(w.begin(), w.end(), [](Value v) { return v == 0; });
}

// Solver for a user-supplied residual expression: expression vertex i must
// be residual vertex i (the i-th smallest surviving original id).
inline WeightedSolver expression_solver(const CwExpression &expr) {
    WeightedSolver s;
    s.name = "cw-expr";
    Graph realized = realize(expr).graph;
    s.applicable = [realized](const Graph &g) { return g == realized; };
    s.solve = [expr](const Graph &, const VertexWeights &w, int k, Objective obj, bool) {
        return solve_cw_weighted(expr, w, k, obj);
    };
    return s;
}

} // namespace detail

// Dispatches to the named algorithm, verifying applicability up front and
// re-verifying the reported value against the witness before returning.
inline SolveResult solve(const Graph &g, const VertexWeights &w, int k, Objective obj,
                         const Strategy &strategy) {
    if (w.size() != static_cast<std::size_t>(g.n()))
        fail(ErrorKind::WeightLengthMismatch, "weights length " + std::to_string(w.size()));
    bool weighted = !detail::all_zero(w);

    auto need_unweighted = [&](const char *what) {
        if (weighted)
            fail(ErrorKind::StrategyNotApplicable,
                 std::string(what) + " solves the unweighted problem; drop the weights");
    };

    SolveResult res;
    switch (strategy.kind) {
    case StrategyKind::Oracle: {
        if (g.n() > 30)
            fail(ErrorKind::StrategyNotApplicable,
                 "oracle enumerates all k-subsets; refusing n=" + std::to_string(g.n()) + " > 30");
        res = brute_force_solve(g, w, k, obj);
        break;
    }
    case StrategyKind::BlockDP: {
        if (!is_block_graph(g))
            fail(ErrorKind::StrategyNotApplicable, "block-dp needs a block graph input");
        res = solve_block_weighted(g, w, k, obj);
        break;
    }
    case StrategyKind::DeletionBlock: {
        need_unweighted("deletion-block");
        WeightedSolver solver = block_dp_solver();
        Graph residual = induced_subgraph(g, complement_set(g.n(), strategy.deletion_set)).graph;
        if (!solver.applicable(residual))
            fail(ErrorKind::StrategyNotApplicable, "residual graph is not a block graph");
        res = solve_with_deletion_set(g, strategy.deletion_set, k, obj, solver, strategy.threads);
        break;
    }
    case StrategyKind::DeletionCw: {
        need_unweighted("deletion-cw");
        WeightedSolver solver =
            strategy.expression ? detail::expression_solver(*strategy.expression) : cw_dp_solver();
        Graph residual = induced_subgraph(g, complement_set(g.n(), strategy.deletion_set)).graph;
        if (!solver.applicable(residual))
            fail(ErrorKind::StrategyNotApplicable,
                 strategy.expression ? "expression does not realize the residual graph"
                                     : "residual graph is not a cograph; pass --expression");
        res = solve_with_deletion_set(g, strategy.deletion_set, k, obj, solver, strategy.threads);
        break;
    }
    case StrategyKind::NdEnum: {
        need_unweighted("nd-enum");
        res = solve_nd(g, k, obj);
        break;
    }
    case StrategyKind::ApproxSplit: {
        need_unweighted("approx-split");
        if (obj != Objective::Densest)
            fail(ErrorKind::StrategyNotApplicable, "approx-split only approximates the densest objective");
        Graph residual = induced_subgraph(g, complement_set(g.n(), strategy.deletion_set)).graph;
        WeightedSolver solver = block_dp_solver();
        if (!solver.applicable(residual)) {
            solver = cw_dp_solver();
            if (!solver.applicable(residual))
                fail(ErrorKind::StrategyNotApplicable,
                     "residual graph is neither a block graph nor a cograph");
        }
        res = approx_densest(g, strategy.deletion_set, k, solver, strategy.threads).result;
        break;
    }
    }

    if (evaluate_set(g, w, res.witness) != res.value)
        fail(ErrorKind::InvalidSpec, "internal: witness does not reproduce the reported value");
    return res;
}

inline SolveResult solve(const Graph &g, int k, Objective obj, const Strategy &strategy) {
    return solve(g, VertexWeights(static_cast<std::size_t>(g.n()), 0), k, obj, strategy);
}

} // namespace dks
