#include <catch2/catch_amalgamated.hpp>

#include "dks/dks.hpp"
#include "test_util.hpp"

using namespace dks;
using namespace dks::testutil;

TEST_CASE("strategy names round-trip") {
    for (StrategyKind k : {StrategyKind::Oracle, StrategyKind::BlockDP, StrategyKind::DeletionBlock,
                           StrategyKind::DeletionCw, StrategyKind::NdEnum, StrategyKind::ApproxSplit})
        CHECK(parse_strategy_kind(strategy_kind_name(k)) == k);
    CHECK_THROWS_AS(parse_strategy_kind("nonsense"), Error);
}

TEST_CASE("dispatch fixtures") {
    Strategy oracle{StrategyKind::Oracle};
    CHECK(solve(complete_graph(4), 2, Objective::Densest, oracle).value == 1);

    Strategy block{StrategyKind::BlockDP};
    CHECK(solve(bowtie(), 3, Objective::Densest, block).value == 3);

    Strategy nd{StrategyKind::NdEnum};
    CHECK(solve(complete_bipartite(2, 2), 3, Objective::Densest, nd).value == 2);
}

TEST_CASE("dispatch rejects inapplicable strategies with diagnostics") {
    Strategy block{StrategyKind::BlockDP};
    try {
        solve(cycle_graph(4), 2, Objective::Densest, block);
        FAIL("expected StrategyNotApplicable");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::StrategyNotApplicable);
        CHECK(std::string(e.what()).find("block graph") != std::string::npos);
    }

    // Residual C5 (empty deletion set) is not a block graph.
    Strategy del{StrategyKind::DeletionBlock};
    try {
        solve(cycle_graph(5), 1, Objective::Densest, del);
        FAIL("expected StrategyNotApplicable");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::StrategyNotApplicable);
        CHECK(std::string(e.what()).find("residual") != std::string::npos);
    }
    // With d={0} the residual is P4 and the solve must succeed.
    del.deletion_set = {0};
    CHECK(solve(cycle_graph(5), 3, Objective::Densest, del).value == 2);
}

TEST_CASE("weights only reach the weighted-capable strategies") {
    VertexWeights w = {5, 0, 0, 0};
    Graph star = star_graph(3);
    Strategy oracle{StrategyKind::Oracle};
    Strategy block{StrategyKind::BlockDP};
    CHECK(solve(star, w, 1, Objective::Densest, oracle).value == 5);
    CHECK(solve(star, w, 1, Objective::Densest, block).value == 5);

    Strategy nd{StrategyKind::NdEnum};
    CHECK_THROWS_AS(solve(star, w, 1, Objective::Densest, nd), Error);
    Strategy del{StrategyKind::DeletionBlock};
    CHECK_THROWS_AS(solve(star, w, 1, Objective::Densest, del), Error);
}

TEST_CASE("deletion-cw accepts a matching user expression and rejects others") {
    // C5 with vertex 0 deleted leaves P4: not a cograph, so an explicit
    // expression is required.
    Graph c5 = cycle_graph(5);
    Strategy plain{StrategyKind::DeletionCw};
    plain.deletion_set = {0};
    CHECK_THROWS_AS(solve(c5, 1, Objective::Densest, plain), Error);

    // Residual vertices 1,2,3,4 become expression ids 0,1,2,3 along the path.
    // P4 needs three labels: 1 marks the attach point, 2 the fresh vertex,
    // 3 the finished prefix.
    Strategy with_expr = plain;
    with_expr.expression = parse_expression(
        "e(1,2,u(r(2,1,r(1,3,e(1,2,u(r(2,1,r(1,3,e(1,2,u(i(1),i(2))))),i(2))))),i(2)))");
    REQUIRE(realize(*with_expr.expression).graph == path_graph(4));
    for (int k = 0; k <= 5; ++k)
        CHECK(solve(c5, k, Objective::Densest, with_expr).value ==
              brute_force_solve(c5, k, Objective::Densest).value);

    // An expression realizing the wrong graph is rejected.
    Strategy bad = plain;
    bad.expression = parse_expression("u(u(u(i(1),i(1)),i(1)),i(1))");
    try {
        solve(c5, 2, Objective::Densest, bad);
        FAIL("expected StrategyNotApplicable");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::StrategyNotApplicable);
    }
}

TEST_CASE("approx-split picks a residual solver automatically") {
    // Planted block instance: block solver route.
    Rng rng(5050);
    InstanceSpec spec;
    spec.kind = InstanceKind::PlantedDeletion;
    spec.n = 10;
    spec.d = 2;
    spec.p = 0.5;
    spec.seed = 7;
    GeneratedInstance inst = generate(spec);
    Strategy ap{StrategyKind::ApproxSplit};
    ap.deletion_set = inst.planted;
    SolveResult r = solve(inst.graph, 4, Objective::Densest, ap);
    Value opt = brute_force_solve(inst.graph, 4, Objective::Densest).value;
    CHECK(2 * r.value >= opt);
    CHECK(r.value <= opt);

    CHECK_THROWS_AS(solve(inst.graph, 4, Objective::Sparsest, ap), Error);
}

TEST_CASE("all applicable strategies agree on random instances") {
    Rng rng(60606);
    for (int trial = 0; trial < 40; ++trial) {
        InstanceSpec spec;
        spec.kind = InstanceKind::PlantedDeletion;
        spec.n = rng.range(2, 12);
        spec.d = rng.range(0, std::min(3, spec.n - 1));
        spec.p = 0.5;
        spec.seed = rng.raw();
        GeneratedInstance inst = generate(spec);
        int k = rng.range(0, inst.graph.n());
        for (Objective obj : {Objective::Densest, Objective::Sparsest}) {
            Strategy oracle{StrategyKind::Oracle};
            Value anchor = solve(inst.graph, k, obj, oracle).value;

            Strategy del{StrategyKind::DeletionBlock};
            del.deletion_set = inst.planted;
            CHECK(solve(inst.graph, k, obj, del).value == anchor);

            Strategy nd{StrategyKind::NdEnum};
            CHECK(solve(inst.graph, k, obj, nd).value == anchor);

            if (is_block_graph(inst.graph)) {
                Strategy block{StrategyKind::BlockDP};
                CHECK(solve(inst.graph, k, obj, block).value == anchor);
            }
            if (is_cograph(inst.graph)) {
                Strategy cw{StrategyKind::DeletionCw};
                CHECK(solve(inst.graph, k, obj, cw).value == anchor);
            }
        }
    }
}

TEST_CASE("generators are deterministic and honor their promises") {
    for (InstanceKind kind : {InstanceKind::BlockGraph, InstanceKind::PlantedDeletion, InstanceKind::Cograph,
                              InstanceKind::ErdosRenyi}) {
        InstanceSpec spec;
        spec.kind = kind;
        spec.n = 14;
        spec.d = kind == InstanceKind::PlantedDeletion ? 3 : 0;
        spec.p = 0.4;
        spec.seed = 99;
        GeneratedInstance a = generate(spec);
        GeneratedInstance b = generate(spec);
        CHECK(a.graph == b.graph);
        CHECK(a.planted == b.planted);
    }

    Rng rng(123);
    for (int trial = 0; trial < 15; ++trial) {
        InstanceSpec spec;
        spec.kind = InstanceKind::PlantedDeletion;
        spec.n = rng.range(4, 16);
        spec.d = rng.range(0, 4);
        spec.p = 0.5;
        spec.seed = rng.raw();
        GeneratedInstance inst = generate(spec);
        CHECK(static_cast<int>(inst.planted.size()) == spec.d);
        CHECK(is_block_graph(induced_subgraph(inst.graph, complement_set(inst.graph.n(), inst.planted)).graph));

        InstanceSpec cg;
        cg.kind = InstanceKind::Cograph;
        cg.n = rng.range(1, 16);
        cg.seed = rng.raw();
        CHECK(is_cograph(generate(cg).graph));
    }

    CHECK_THROWS_AS(generate(InstanceSpec{InstanceKind::ErdosRenyi, -1, 0, 4, 0.5, 0}), Error);
    CHECK_THROWS_AS(generate(InstanceSpec{InstanceKind::PlantedDeletion, 4, 9, 4, 0.5, 0}), Error);
}
