#include <catch2/catch_amalgamated.hpp>

#include "dks/block_dp.hpp"
#include "dks/oracle.hpp"
#include "test_util.hpp"

using namespace dks;
using namespace dks::testutil;

TEST_CASE("knapsack merge examples") {
    MergeTable a{{0, 2}}, b{{0, 3}};
    MergeTable out = knapsack_merge(a, b, 2, Objective::Densest);
    CHECK(out.vals == std::vector<Value>{0, 3, 5});

    SECTION("zero-only table is the identity") {
        MergeTable id = MergeTable::zero_only(3, Objective::Densest);
        MergeTable t{{0, 4, 9, kNegSentinel}};
        MergeTable merged = knapsack_merge(t, id, 3, Objective::Densest);
        CHECK(merged.vals == t.vals);
    }
}

TEST_CASE("knapsack merge is commutative and associative") {
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Objective obj = trial % 2 == 0 ? Objective::Densest : Objective::Sparsest;
        int cap = rng.range(0, 8);
        auto rand_table = [&]() {
            MergeTable t;
            t.vals.resize(static_cast<std::size_t>(rng.range(1, cap + 1)));
            for (auto &v : t.vals)
                v = rng.coin(0.2) ? sentinel_for(obj) : static_cast<Value>(rng.range(-5, 9));
            return t;
        };
        MergeTable a = rand_table(), b = rand_table(), c = rand_table();

        // Direct double-loop evaluation as the oracle for one merge.
        auto direct = [&](const MergeTable &x, const MergeTable &y) {
            detail::Opt op{obj};
            MergeTable out;
            out.vals.assign(static_cast<std::size_t>(cap) + 1, op.sent());
            for (int i = 0; i < static_cast<int>(x.vals.size()); ++i)
                for (int j = 0; j < static_cast<int>(y.vals.size()); ++j)
                    if (i + j <= cap) op.relax(out.vals[static_cast<std::size_t>(i + j)], op.add(x.at(i), y.at(j)));
            return out;
        };
        CHECK(knapsack_merge(a, b, cap, obj).vals == direct(a, b).vals);
        CHECK(knapsack_merge(a, b, cap, obj).vals == knapsack_merge(b, a, cap, obj).vals);
        MergeTable left = knapsack_merge(knapsack_merge(a, b, cap, obj), c, cap, obj);
        MergeTable right = knapsack_merge(a, knapsack_merge(b, c, cap, obj), cap, obj);
        CHECK(left.vals == right.vals);
    }
}

TEST_CASE("block dp on fixtures") {
    Graph bt = bowtie();
    CHECK(solve_block_weighted(bt, 3, Objective::Densest).value == 3);
    CHECK(solve_block_weighted(bt, 5, Objective::Densest).value == 6);
    CHECK(solve_block_weighted(path_graph(4), 2, Objective::Sparsest).value == 0);

    // Best 4-set of the bowtie: a triangle plus a neighbor of the cut vertex.
    SolveResult r4 = solve_block_weighted(bt, 4, Objective::Densest);
    CHECK(r4.value == brute_force_solve(bt, 4, Objective::Densest).value);
    CHECK(r4.value == 4);
}

TEST_CASE("block dp weighted fixtures") {
    Graph star = star_graph(3);
    VertexWeights w = {5, 0, 0, 0};
    SolveResult r = brute_force_solve(star, w, 1, Objective::Densest);
    SolveResult d = solve_block_weighted(star, w, 1, Objective::Densest);
    CHECK(d.value == r.value);
    CHECK(d.witness == std::vector<int>{0});
}

TEST_CASE("block dp rejects bad input") {
    CHECK_THROWS_AS(solve_block_weighted(cycle_graph(4), 2, Objective::Densest), Error);
    CHECK_THROWS_AS(solve_block_weighted(path_graph(3), 4, Objective::Densest), Error);
    try {
        solve_block_weighted(cycle_graph(5), 2, Objective::Densest);
        FAIL("expected NotBlockGraph");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotBlockGraph);
    }
}

TEST_CASE("block dp matches the oracle on random weighted block graphs") {
    Rng rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        InstanceSpec spec;
        spec.kind = InstanceKind::BlockGraph;
        spec.n = rng.range(1, 12);
        spec.max_block = rng.range(2, 5);
        spec.seed = rng.raw();
        Graph g = generate(spec).graph;
        // Mix in disconnected inputs by dropping a random vertex's edges... a
        // cleaner route: sometimes take the disjoint union of two instances.
        if (rng.coin(0.3)) {
            InstanceSpec extra = spec;
            extra.n = rng.range(1, 12 - 0);
            extra.seed = rng.raw();
            Graph g2 = generate(extra).graph;
            Graph u(g.n() + g2.n());
            for (auto [a, b] : g.edges()) u.add_edge(a, b);
            for (auto [a, b] : g2.edges()) u.add_edge(g.n() + a, g.n() + b);
            u.finalize();
            g = u;
        }
        VertexWeights w = random_weights(g, rng);
        for (Objective obj : {Objective::Densest, Objective::Sparsest}) {
            for (int k = 0; k <= g.n(); ++k) {
                SolveResult fast = solve_block_weighted(g, w, k, obj);
                SolveResult slow = brute_force_solve(g, w, k, obj);
                INFO("n=" << g.n() << " k=" << k << " obj=" << objective_name(obj) << " trial=" << trial);
                REQUIRE(fast.value == slow.value);
                REQUIRE(static_cast<int>(fast.witness.size()) == k);
                REQUIRE(evaluate_set(g, w, fast.witness) == fast.value);
            }
        }
    }
}
