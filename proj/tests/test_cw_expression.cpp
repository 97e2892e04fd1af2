#include <catch2/catch_amalgamated.hpp>

#include "dks/cw_expression.hpp"
#include "test_util.hpp"

using namespace dks;
using namespace dks::testutil;

TEST_CASE("parsing the basic forms") {
    CwExpression e = parse_expression("e(1,2,u(i(1),i(2)))");
    const CwNode &root = e.at(e.root);
    REQUIRE(root.kind == CwNode::Kind::Join);
    CHECK(root.label_a == 1);
    CHECK(root.label_b == 2);
    const CwNode &un = e.at(root.child);
    REQUIRE(un.kind == CwNode::Kind::Union);
    CHECK(e.at(un.child).kind == CwNode::Kind::Introduce);
    CHECK(e.at(un.child).vertex == 0);
    CHECK(e.at(un.child2).vertex == 1);
    CHECK(e.vertex_count == 2);

    CwExpression r = parse_expression("r(2,1,i(2))");
    CHECK(r.at(r.root).kind == CwNode::Kind::Relabel);
    CHECK(r.at(r.root).label_a == 2);
    CHECK(r.at(r.root).label_b == 1);

    CHECK_NOTHROW(parse_expression(" u( i(1) ,\n i(2) ) # comment\n"));
    CHECK_NOTHROW(parse_expression("# leading comment\nu(i(1),i(2))"));
}

TEST_CASE("parser rejects malformed expressions") {
    auto kind_of = [](const std::string &text) {
        try {
            parse_expression(text);
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::IoError;
    };
    CHECK(kind_of("e(1,1,u(i(1),i(1)))") == ErrorKind::JoinSameLabel);
    CHECK(kind_of("r(3,3,i(1))") == ErrorKind::RelabelSameLabel);
    CHECK(kind_of("i(0)") == ErrorKind::BadLabel);
    CHECK(kind_of("i(1") == ErrorKind::SyntaxError);
    CHECK(kind_of("q(1)") == ErrorKind::SyntaxError);
    CHECK(kind_of("u(i(1))") == ErrorKind::SyntaxError);
    CHECK(kind_of("i(1)i(2)") == ErrorKind::SyntaxError);
    CHECK(kind_of("i(01)") == ErrorKind::SyntaxError);
    CHECK(kind_of("") == ErrorKind::SyntaxError);

    try {
        parse_expression("u(i(1),x(2))");
        FAIL("expected SyntaxError");
    } catch (const Error &e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("emit is canonical and round-trips") {
    for (const char *src : {"e(1,2,u(i(1),i(2)))", "r(2,1,i(2))", "u(u(i(1),i(2)),i(3))"}) {
        CwExpression e = parse_expression(src);
        std::string emitted = emit_expression(e);
        CHECK(emitted == src);
        CHECK(structurally_equal(parse_expression(emitted), e));
    }
    // whitespace-free regardless of input spacing
    CHECK(emit_expression(parse_expression(" u( i(1) , i(2) ) ")) == "u(i(1),i(2))");
}

TEST_CASE("random expressions round-trip structurally") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        CwExpression e = random_expression(rng, rng.range(0, 8), 4);
        CwExpression back = parse_expression(emit_expression(e));
        REQUIRE(structurally_equal(e, back));
        REQUIRE(emit_expression(back) == emit_expression(e));
        // Same labeled graph through a full parse-emit-parse cycle.
        LabeledGraph a = realize(e), b = realize(back);
        REQUIRE(a.graph == b.graph);
        REQUIRE(a.labels == b.labels);
    }
}

TEST_CASE("realize on fixtures") {
    LabeledGraph k2 = realize(parse_expression("e(1,2,u(i(1),i(2)))"));
    CHECK(k2.graph.n() == 2);
    CHECK(k2.graph.m() == 1);
    CHECK(k2.labels == std::vector<int>{1, 2});

    // K2,2 is the 4-cycle.
    LabeledGraph c4 = realize(parse_expression("e(1,2,u(u(i(1),i(1)),u(i(2),i(2))))"));
    CHECK(c4.graph.m() == 4);
    CHECK(c4.graph.has_edge(0, 2));
    CHECK(c4.graph.has_edge(0, 3));
    CHECK(c4.graph.has_edge(1, 2));
    CHECK(c4.graph.has_edge(1, 3));
    CHECK_FALSE(c4.graph.has_edge(0, 1));

    // Joining twice adds no duplicate edges.
    LabeledGraph twice = realize(parse_expression("e(1,2,e(1,2,u(i(1),i(2))))"));
    CHECK(twice.graph.m() == 1);

    CwExpression e = parse_expression("u(e(1,2,u(i(1),i(2))),i(1))");
    int introduces = 0;
    for (const CwNode &n : e.nodes)
        if (n.kind == CwNode::Kind::Introduce) ++introduces;
    CHECK(introduces == realize(e).graph.n());
}

TEST_CASE("relabel semantics") {
    // After r(1,2,..), a join on 1 with anything does nothing.
    LabeledGraph g = realize(parse_expression("e(1,2,u(r(1,2,i(1)),i(2)))"));
    CHECK(g.graph.m() == 0);
    CHECK(g.labels == std::vector<int>{2, 2});
}

TEST_CASE("cograph expressions") {
    SECTION("K3") {
        CographExpression ce = cograph_to_expression(complete_graph(3));
        LabeledGraph lg = realize(ce.expr);
        CHECK(lg.graph.n() == 3);
        CHECK(lg.graph.m() == 3);
        CHECK(ce.expr.label_count() <= 2);
    }
    SECTION("P4 is not a cograph") {
        try {
            cograph_to_expression(path_graph(4));
            FAIL("expected NotCograph");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::NotCograph);
        }
        CHECK_FALSE(is_cograph(path_graph(4)));
        CHECK(is_cograph(path_graph(3)));
        CHECK(is_cograph(complete_graph(5)));
    }
    SECTION("random cographs realize back to the same graph") {
        Rng rng(31337);
        for (int trial = 0; trial < 100; ++trial) {
            InstanceSpec spec;
            spec.kind = InstanceKind::Cograph;
            spec.n = rng.range(1, 12);
            spec.seed = rng.raw();
            Graph g = generate(spec).graph;
            CographExpression ce = cograph_to_expression(g);
            CHECK(ce.expr.label_count() <= 2);
            LabeledGraph lg = realize(ce.expr);
            REQUIRE(lg.graph.n() == g.n());
            // Compare edge sets through the vertex map.
            Graph mapped(g.n());
            for (auto [u, v] : lg.graph.edges())
                mapped.add_edge(ce.vertex_map[static_cast<std::size_t>(u)],
                                ce.vertex_map[static_cast<std::size_t>(v)]);
            mapped.finalize();
            REQUIRE(mapped == g);
        }
    }
}
