#include <catch2/catch_amalgamated.hpp>

#include "dks/deletion.hpp"
#include "dks/oracle.hpp"
#include "dks/solvers.hpp"
#include "test_util.hpp"

using namespace dks;
using namespace dks::testutil;

namespace {
SolveResult oracle_fn(const Graph &g, int k, Objective obj) { return brute_force_solve(g, k, obj); }
} // namespace

TEST_CASE("deletion framework on fixtures") {
    WeightedSolver block = block_dp_solver();

    CHECK(solve_with_deletion_set(cycle_graph(4), {0}, 3, Objective::Densest, block).value == 2);
    CHECK(solve_with_deletion_set(complete_graph(4), {}, 2, Objective::Densest, block).value == 1);

    // Bowtie plus an apex vertex 5 adjacent to everything.
    Graph g(6);
    for (auto [u, v] : bowtie().edges()) g.add_edge(u, v);
    for (int v = 0; v < 5; ++v) g.add_edge(v, 5);
    g.finalize();
    SolveResult r = solve_with_deletion_set(g, {5}, 4, Objective::Densest, block);
    SolveResult want = brute_force_solve(g, 4, Objective::Densest);
    CHECK(r.value == want.value);
    CHECK(static_cast<int>(r.witness.size()) == 4);
    CHECK(edge_count_within(g, r.witness) == r.value);
}

TEST_CASE("deletion framework error paths") {
    WeightedSolver block = block_dp_solver();
    // Residual C5 is not a block graph.
    try {
        solve_with_deletion_set(cycle_graph(5), {}, 2, Objective::Densest, block);
        FAIL("expected InvalidDeletionSet");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::InvalidDeletionSet);
    }
    // Oversized deletion sets are rejected before any enumeration.
    Graph big(40);
    std::vector<int> d(31);
    for (int i = 0; i < 31; ++i) d[static_cast<std::size_t>(i)] = i;
    try {
        solve_with_deletion_set(big, d, 5, Objective::Densest, block);
        FAIL("expected DeletionSetTooLarge");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::DeletionSetTooLarge);
    }
    CHECK_THROWS_AS(solve_with_deletion_set(cycle_graph(4), {0, 0}, 1, Objective::Densest, block), Error);
    CHECK_THROWS_AS(solve_with_deletion_set(cycle_graph(4), {0}, 9, Objective::Densest, block), Error);
}

TEST_CASE("edge count splits across deletion boundary") {
    // |E(g[S u T])| = |E(g[S])| + |E(g[T])| + sum over T of |N(v) and S|.
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        InstanceSpec spec;
        spec.kind = InstanceKind::ErdosRenyi;
        spec.n = rng.range(1, 12);
        spec.p = 0.5;
        spec.seed = rng.raw();
        Graph g = generate(spec).graph;
        std::vector<int> s, t;
        for (int v = 0; v < g.n(); ++v) {
            int where = rng.range(0, 2);
            if (where == 0) s.push_back(v);
            else if (where == 1) t.push_back(v);
        }
        std::vector<int> both(s);
        both.insert(both.end(), t.begin(), t.end());
        Value cross = 0;
        std::vector<char> in_s(static_cast<std::size_t>(g.n()), 0);
        for (int v : s) in_s[static_cast<std::size_t>(v)] = 1;
        for (int v : t)
            for (int u : g.neighbors(v)) cross += in_s[static_cast<std::size_t>(u)];
        CHECK(edge_count_within(g, both) == edge_count_within(g, s) + edge_count_within(g, t) + cross);
    }
}

TEST_CASE("deletion framework matches oracle on planted instances") {
    WeightedSolver block = block_dp_solver();
    Rng rng(55);
    for (int trial = 0; trial < 60; ++trial) {
        InstanceSpec spec;
        spec.kind = InstanceKind::PlantedDeletion;
        spec.n = rng.range(4, 12);
        spec.d = rng.range(0, std::min(4, spec.n - 1));
        spec.p = 0.5;
        spec.seed = rng.raw();
        GeneratedInstance inst = generate(spec);
        int k = rng.range(0, inst.graph.n());
        Objective obj = trial % 2 == 0 ? Objective::Densest : Objective::Sparsest;
        SolveResult fast = solve_with_deletion_set(inst.graph, inst.planted, k, obj, block);
        SolveResult slow = brute_force_solve(inst.graph, k, obj);
        INFO("trial=" << trial << " n=" << spec.n << " d=" << spec.d << " k=" << k);
        REQUIRE(fast.value == slow.value);
        REQUIRE(edge_count_within(inst.graph, fast.witness) == fast.value);
    }
}

TEST_CASE("any valid deletion set gives the same value") {
    WeightedSolver block = block_dp_solver();
    Rng rng(91);
    for (int trial = 0; trial < 25; ++trial) {
        InstanceSpec spec;
        spec.kind = InstanceKind::PlantedDeletion;
        spec.n = rng.range(5, 12);
        spec.d = rng.range(1, 3);
        spec.p = 0.5;
        spec.seed = rng.raw();
        GeneratedInstance inst = generate(spec);
        // Removing one extra vertex keeps the residual a block graph.
        std::vector<int> wider = inst.planted;
        wider.push_back(rng.range(0, inst.graph.n() - spec.d - 1));
        int k = rng.range(0, inst.graph.n());
        for (Objective obj : {Objective::Densest, Objective::Sparsest}) {
            Value a = solve_with_deletion_set(inst.graph, inst.planted, k, obj, block).value;
            Value b = solve_with_deletion_set(inst.graph, wider, k, obj, block).value;
            CHECK(a == b);
        }
    }
}

TEST_CASE("threaded candidate scan is deterministic") {
    WeightedSolver block = block_dp_solver();
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        InstanceSpec spec;
        spec.kind = InstanceKind::PlantedDeletion;
        spec.n = 11;
        spec.d = 4;
        spec.p = 0.5;
        spec.seed = rng.raw();
        GeneratedInstance inst = generate(spec);
        int k = rng.range(0, inst.graph.n());
        SolveResult one = solve_with_deletion_set(inst.graph, inst.planted, k, Objective::Densest, block, 1);
        SolveResult four = solve_with_deletion_set(inst.graph, inst.planted, k, Objective::Densest, block, 4);
        CHECK(one.value == four.value);
        CHECK(one.witness == four.witness);
    }
}

TEST_CASE("max k vertex cover fixtures") {
    auto r = max_k_vertex_cover(path_graph(3), 1, oracle_fn);
    CHECK(r.covered_edges == 2);
    CHECK(r.cover == std::vector<int>{1});

    CHECK(max_k_vertex_cover(complete_graph(4), 4, oracle_fn).covered_edges == 6);
    CHECK(max_k_vertex_cover(cycle_graph(5), 2, oracle_fn).covered_edges == 4);
}

TEST_CASE("max k vertex cover equals exhaustive maximum") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        InstanceSpec spec;
        spec.kind = InstanceKind::ErdosRenyi;
        spec.n = rng.range(1, 10);
        spec.p = 0.5;
        spec.seed = rng.raw();
        Graph g = generate(spec).graph;
        int k = rng.range(0, g.n());
        auto got = max_k_vertex_cover(g, k, oracle_fn);

        Value best = 0;
        for_each_k_subset(g.n(), k, [&](const std::vector<int> &s) {
            std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
            for (int v : s) in[static_cast<std::size_t>(v)] = 1;
            Value covered = 0;
            for (auto [u, v] : g.edges())
                if (in[static_cast<std::size_t>(u)] || in[static_cast<std::size_t>(v)]) ++covered;
            best = std::max(best, covered);
            return true;
        });
        CHECK(got.covered_edges == best);
        CHECK(static_cast<int>(got.cover.size()) == k);
    }
}
