#include "doctest.h"

#include "queuelay/common.hpp"
#include "queuelay/layout.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace queuelay;
using namespace queuelay_tests;

TEST_CASE("linear order validation") {
    LinearOrder id = LinearOrder::identity(4);
    CHECK(id.rank(2) == 2);
    CHECK(id.vertex_at(3) == 3);
    LinearOrder ord = LinearOrder::from_sequence({2, 0, 3, 1});
    CHECK(ord.rank(2) == 0);
    CHECK(ord.rank(1) == 3);
    CHECK(ord.reversed().sequence() == std::vector<int>{1, 3, 0, 2});
    CHECK_THROWS_AS(LinearOrder::from_sequence({0, 0, 1}), LayoutError);
    CHECK_THROWS_AS(LinearOrder::from_sequence({0, 3}), LayoutError);
    CHECK_THROWS_AS(ord.rank(9), LayoutError);
}

TEST_CASE("nesting and crossing predicates") {
    LinearOrder id = LinearOrder::identity(5);
    CHECK(nests(Edge(0, 3), Edge(1, 2), id));
    CHECK(nests(Edge(1, 2), Edge(0, 3), id));  // symmetric
    CHECK(!nests(Edge(0, 2), Edge(1, 3), id));
    CHECK(crosses(Edge(0, 2), Edge(1, 3), id));
    CHECK(!crosses(Edge(0, 3), Edge(1, 2), id));
    // shared endpoints never nest or cross
    CHECK(!nests(Edge(0, 4), Edge(0, 2), id));
    CHECK(!crosses(Edge(0, 2), Edge(2, 3), id));
    // reordering flips the verdict
    LinearOrder ord = LinearOrder::from_sequence({1, 0, 2, 3, 4});
    CHECK(!nests(Edge(0, 3), Edge(1, 2), ord));
}

TEST_CASE("span, below, outside") {
    LinearOrder ord = LinearOrder::from_sequence({3, 1, 4, 0, 2});
    std::vector<int> cl = {1, 0};  // ranks 1 and 3
    CHECK(span(cl, ord) == std::pair<int, int>{1, 3});
    CHECK(below(4, cl, ord));
    CHECK(!below(1, cl, ord));
    CHECK(outside(3, cl, ord));
    CHECK(outside(2, cl, ord));
    CHECK(!outside(4, cl, ord));
    CHECK_THROWS_AS(span({}, ord), LayoutError);
}

TEST_CASE("validate_layout catches nesting and locality faults") {
    // 0-3 over 1-2 in one queue
    Graph g(4, {Edge(0, 3), Edge(1, 2)});
    QueueLayout L{LinearOrder::identity(4), {0, 0}};
    auto bad = validate_layout(g, L);
    REQUIRE(std::holds_alternative<RainbowViolation>(bad));
    auto rv = std::get<RainbowViolation>(bad);
    CHECK(rv.queue == 0);
    CHECK(nests(rv.a, rv.b, L.order));

    QueueLayout ok{LinearOrder::identity(4), {0, 1}};
    CHECK(validation_ok(validate_layout(g, ok)));

    // locality: vertex 0 sees queues {0,1,2}
    Graph star(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
    QueueLayout spread{LinearOrder::identity(4), {0, 1, 2}};
    CHECK(validation_ok(validate_layout(star, spread)));
    auto lv = validate_layout(star, spread, 2);
    REQUIRE(std::holds_alternative<LocalityViolation>(lv));
    CHECK(std::get<LocalityViolation>(lv).vertex == 0);
    CHECK(std::get<LocalityViolation>(lv).queues == std::vector<int>{0, 1, 2});
    CHECK(validation_ok(validate_layout(star, spread, 3)));

    QueueLayout short_assign{LinearOrder::identity(4), {0}};
    CHECK_THROWS_AS(validate_layout(g, short_assign), CoverageError);
}

TEST_CASE("max_rainbow on known instances") {
    // three perfectly nested edges
    Graph g(6, {Edge(0, 5), Edge(1, 4), Edge(2, 3)});
    auto r = max_rainbow(g, LinearOrder::identity(6));
    CHECK(r.size == 3);
    CHECK(rainbow_witness_ok(r.witness, LinearOrder::identity(6)));
    CHECK(r.witness.edges.size() == 3);

    // crossing pattern has no 2-rainbow
    Graph cr(4, {Edge(0, 2), Edge(1, 3)});
    CHECK(max_rainbow(cr, LinearOrder::identity(4)).size == 1);

    // shared left endpoint cannot form a rainbow
    Graph sh(5, {Edge(0, 3), Edge(0, 4), Edge(1, 2)});
    CHECK(max_rainbow(sh, LinearOrder::identity(5)).size == 2);

    Graph empty(3, {});
    CHECK(max_rainbow(empty, LinearOrder::identity(3)).size == 0);
}

TEST_CASE("max_rainbow matches the DAG oracle on random instances") {
    Rng rng(2026);
    for (int t = 0; t < 300; ++t) {
        int n = 2 + static_cast<int>(rng.below(8));
        Graph g = random_graph(n, rng);
        LinearOrder ord = random_order(n, rng);
        auto r = max_rainbow(g, ord);
        CHECK(r.size == naive_max_rainbow(g, ord));
        if (r.size > 0) {
            CHECK(static_cast<int>(r.witness.edges.size()) == r.size);
            CHECK(rainbow_witness_ok(r.witness, ord));
        }
    }
}

TEST_CASE("validate_layout agrees with the naive scan on random layouts") {
    Rng rng(77);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(rng.below(7));
        Graph g = random_graph(n, rng);
        QueueLayout L;
        L.order = random_order(n, rng);
        L.queue_of.resize(g.edge_count());
        int nq = 1 + static_cast<int>(rng.below(4));
        for (int i = 0; i < g.edge_count(); ++i) L.queue_of[i] = rng.below_int(nq);
        std::optional<int> ell;
        if (rng.coin()) ell = 1 + static_cast<int>(rng.below(3));
        CHECK(validation_ok(validate_layout(g, L, ell)) == naive_layout_valid(g, L, ell));
    }
}

TEST_CASE("random_valid_layout generator really is valid") {
    Rng rng(99);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng.below(7));
        Graph g = random_graph(n, rng);
        QueueLayout L = random_valid_layout(g, rng);
        CHECK(validation_ok(validate_layout(g, L)));
    }
}

TEST_CASE("canonical queue relabel orders ids by first occurrence") {
    Graph g(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
    QueueLayout L{LinearOrder::identity(4), {7, 3, 7}};
    QueueLayout c = canonical_queue_relabel(g, L);
    CHECK(c.queue_of == std::vector<int>{0, 1, 0});
    // idempotent
    QueueLayout c2 = canonical_queue_relabel(g, c);
    CHECK(c2.queue_of == c.queue_of);
    // relabeling preserves validity verdicts
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        int n = 2 + static_cast<int>(rng.below(6));
        Graph h = random_graph(n, rng);
        QueueLayout raw;
        raw.order = random_order(n, rng);
        raw.queue_of.resize(h.edge_count());
        for (int i = 0; i < h.edge_count(); ++i) raw.queue_of[i] = rng.below_int(3) * 5;
        QueueLayout canon = canonical_queue_relabel(h, raw);
        CHECK(validation_ok(validate_layout(h, raw)) == validation_ok(validate_layout(h, canon)));
        CHECK(canon.queue_count() == raw.queue_count());
    }
}

TEST_CASE("layout locality helpers") {
    Graph g(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2)});
    QueueLayout L{LinearOrder::identity(4), {0, 1, 0, 1}};
    CHECK(locality(g, L, 0) == 2);
    CHECK(locality(g, L, 3) == 1);
    CHECK(layout_locality(g, L) == 2);
    Graph empty(2, {});
    QueueLayout E{LinearOrder::identity(2), {}};
    CHECK(layout_locality(empty, E) == 0);
}
