#include "doctest.h"

#include "queuelay/common.hpp"
#include "queuelay/graph.hpp"

using namespace queuelay;

TEST_CASE("edges normalize and reject self-loops") {
    Edge e(3, 1);
    CHECK(e.u == 1);
    CHECK(e.v == 3);
    CHECK(Edge(1, 3) == e);
    CHECK_THROWS_AS(Edge(2, 2), GraphError);
}

TEST_CASE("graph construction validates") {
    CHECK_THROWS_AS(Graph(2, {Edge(0, 2)}), GraphError);
    CHECK_THROWS_AS(Graph(3, {Edge(0, 1), Edge(1, 0)}), GraphError);  // duplicate
    Graph g(4, {Edge(2, 3), Edge(0, 1), Edge(1, 3)});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    // edges sorted
    CHECK(g.edges()[0] == Edge(0, 1));
    CHECK(g.edges()[2] == Edge(2, 3));
    CHECK(g.has_edge(3, 1));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.edge_index(2, 3) == 2);
    CHECK(g.edge_index(0, 3) == -1);
    CHECK(g.neighbors(1) == std::vector<int>{0, 3});
    CHECK(g.degree(1) == 2);
}

TEST_CASE("edge list text round trip") {
    Graph g(5, {Edge(0, 1), Edge(1, 4), Edge(2, 3)});
    std::string text = emit_edge_list(g);
    Graph back = parse_edge_list(text);
    CHECK(back.vertex_count() == 5);
    CHECK(back.edges() == g.edges());
    CHECK(emit_edge_list(back) == text);
}

TEST_CASE("edge list parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n2 1\n"), ParseError);      // u >= v
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);      // out of range
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);      // too few edges
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n0 2\n"), ParseError); // too many
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 7\n"), ParseError);    // trailing token
    CHECK_NOTHROW(parse_edge_list("1 0\n"));
    CHECK_NOTHROW(parse_edge_list("4 2\n0 1\n\n2 3\n"));             // blank lines ok
}

TEST_CASE("degeneracy on known graphs") {
    // path 0-1-2
    Graph path(3, {Edge(0, 1), Edge(1, 2)});
    CHECK(degeneracy(path) == 1);
    // smallest-id ties: vertex 0 leaves first
    CHECK(degeneracy_order(path, false) == std::vector<int>{0, 1, 2});
    // largest-id ties: vertex 2 leaves first
    CHECK(degeneracy_order(path, true) == std::vector<int>{2, 1, 0});

    Graph k4(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3)});
    CHECK(degeneracy(k4) == 3);
}

TEST_CASE("rng is deterministic and unbiased enough") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng r(7);
    int counts[3] = {0, 0, 0};
    for (int i = 0; i < 3000; ++i) ++counts[r.below_int(3)];
    for (int c : counts) CHECK(c > 800);
    CHECK_THROWS_AS(r.below(0), Error);
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(2, 4), b(1, 2);
    CHECK(a == b);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 2) * Rational(4, 3)) == Rational(2, 1));
    CHECK((Rational(7, 2) / Rational(7, 4)) == Rational(2, 1));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(1, 3) < Rational(2, 5));
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), Error);
}
