#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "queuelay/game.hpp"
#include "queuelay/lifts.hpp"
#include "queuelay/strategies.hpp"
#include "support/generators.hpp"

using namespace queuelay;
using namespace queuelay_tests;

namespace {

GameConfig lift_cfg(int k, int ell, int level) {
    GameConfig c;
    c.k = k;
    c.ell = ell;
    c.level = level;
    c.caps.max_rounds = 12;
    c.caps.max_vertices = 100000;
    return c;
}

// Always re-picks the initial clique; used to hit the lift guard.
struct InitialOnly final : Strategy {
    std::string name() const override { return "initial-only"; }
    std::optional<AliceMove> choose(const GameState& s) const override {
        std::vector<int> init(s.config.k);
        for (int v = 0; v < s.config.k; ++v) init[v] = v;
        return AliceMove{init, 1};
    }
};

}  // namespace

TEST_CASE("copy-diversity lift is the identity between the mirrored games") {
    const GameConfig c7 = lift_cfg(2, 2, 7);
    const GameConfig c6 = lift_cfg(2, 2, 6);
    const GameOutcome direct = verify_alice_wins(*pinning_chain_strategy(), c7);
    const GameOutcome lifted = verify_alice_wins(*ensure_copy_diverse(pinning_chain_strategy()), c6);
    CHECK(direct.verdict == GameVerdict::AliceWins);
    CHECK(lifted.verdict == GameVerdict::AliceWins);
    CHECK(direct.nodes_expanded == lifted.nodes_expanded);
    CHECK(direct.tree.nodes.size() == lifted.tree.nodes.size());
    CHECK(direct.tree.roots.size() == lifted.tree.roots.size());

    // the move itself passes through unchanged
    const GameState s6 = initial_states(c6).at(0);
    GameState view = s6;
    view.config.level = 7;
    const auto lifted_mv = ensure_copy_diverse(pinning_chain_strategy())->choose(s6);
    const auto direct_mv = pinning_chain_strategy()->choose(view);
    REQUIRE(lifted_mv.has_value());
    REQUIRE(direct_mv.has_value());
    CHECK(lifted_mv->clique == direct_mv->clique);
    CHECK(lifted_mv->m == direct_mv->m);
}

TEST_CASE("right-placement lift wins the whole level-4 game") {
    GameConfig c = lift_cfg(2, 2, 4);
    c.caps.max_tree_nodes = 20000;
    const auto strat = ensure_right_placement(witness_strategy());
    const GameOutcome o = verify_alice_wins(*strat, c);
    REQUIRE(o.verdict == GameVerdict::AliceWins);
    CHECK(o.tree.roots.size() == 1);
    CHECK(o.nodes_expanded < 1000);
    int leaves = 0;
    for (const WinNode& node : o.tree.nodes) {
        if (!node.children.empty()) continue;
        ++leaves;
        CHECK(node.replies.empty());
        CHECK(!node.refutations.empty());
        for (const LeafRefutation& ref : node.refutations)
            CHECK(!validation_ok(ref.fault));
    }
    CHECK(leaves > 0);
}

TEST_CASE("right-placement lift asks for sentinels and keeps the middle children") {
    const GameConfig c = lift_cfg(2, 2, 4);
    const auto strat = ensure_right_placement(witness_strategy());
    GameState s = initial_states(c).at(0);

    const auto mv1 = strat->choose(s);
    REQUIRE(mv1.has_value());
    CHECK(mv1->clique == std::vector<int>{0, 1});
    CHECK(mv1->m == 3);  // inner asks for one child, plus two sentinels

    const auto replies = legal_bob_moves(s, *mv1);
    REQUIRE(!replies.empty());
    s = apply_move(s, *mv1, replies.front());

    // children are 2,3,4 and only the middle child 3 is kept; the inner
    // witness pins its second round to an initial vertex and that child
    // (vertex 1, which this reply already saturates with two queues)
    const auto mv2 = strat->choose(s);
    REQUIRE(mv2.has_value());
    CHECK(mv2->clique == std::vector<int>{1, 3});
    CHECK(mv2->m == 3);
}

TEST_CASE("right-placement lift refuses an unforceable initial re-pick") {
    const GameConfig c = lift_cfg(2, 2, 4);
    const auto strat = ensure_right_placement(std::make_unique<InitialOnly>());
    GameState s = initial_states(c).at(0);
    const auto mv1 = strat->choose(s);
    REQUIRE(mv1.has_value());  // round 1 on the initial clique is fine
    const auto replies = legal_bob_moves(s, *mv1);
    REQUIRE(!replies.empty());
    s = apply_move(s, *mv1, replies.front());
    CHECK_THROWS_AS(strat->choose(s), GameError);
}

TEST_CASE("twin-queues lift keeps the largest queue-tuple class") {
    const GameConfig c = lift_cfg(2, 2, 3);
    auto counters = std::make_shared<LiftCounters>();
    const auto strat = ensure_twin_queues(ensure_right_placement(witness_strategy()), counters);
    GameState s = initial_states(c).at(0);

    const auto mv1 = strat->choose(s);
    REQUIRE(mv1.has_value());
    CHECK(mv1->clique == std::vector<int>{0, 1});
    CHECK(mv1->m == 12);  // three children times ell^k = 4 classes

    Rng rng(2024);
    std::optional<BobMove> bm = sample_legal_reply(s, *mv1, rng, 256);
    REQUIRE(bm.has_value());
    s = apply_move(s, *mv1, *bm);

    // recompute the expected class by hand
    std::map<std::vector<int>, std::vector<int>> classes;
    for (int x : s.rounds[0].children)
        classes[{s.queue_of(0, x), s.queue_of(1, x)}].push_back(x);
    const std::vector<int>* best = nullptr;
    for (const auto& [tup, xs] : classes)
        if (!best || xs.size() > best->size() ||
            (xs.size() == best->size() && xs.front() < best->front()))
            best = &xs;
    REQUIRE(best != nullptr);
    REQUIRE(best->size() >= 3);

    const auto mv2 = strat->choose(s);
    REQUIRE(mv2.has_value());
    // the lift keeps the first three children of the winning class, the
    // right-placement stage below keeps the middle one of those, and the
    // witness pins round 2 to {initial vertex, that child}
    CHECK(mv2->clique == std::vector<int>{0, (*best)[1]});
    CHECK(mv2->m == 12);
    CHECK(counters->twin_selections > 0);
    CHECK(counters->max_twin_classes <= 4);
}

TEST_CASE("twin-queues lift reports impossible class counts as engine bugs") {
    const GameConfig c = lift_cfg(2, 2, 3);
    const auto strat = ensure_twin_queues(ensure_right_placement(witness_strategy()), nullptr);
    GameState s = initial_states(c).at(0);
    const AliceMove mv{{0, 1}, 12};
    // hand-built reply with five distinct queue tuples; it breaks the
    // locality bound, so no legal game could contain it, but apply_move only
    // checks shape and the lift must flag the impossible class count
    BobMove bm;
    bm.spine_after = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
    bm.queues = {0, 0, 0, 1, 1, 0, 1, 1, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    s = apply_move(s, mv, bm);
    CHECK_THROWS_AS(strat->choose(s), PigeonholeError);
}

TEST_CASE("consecutive-block lift scans spine runs with sound inflation") {
    const GameConfig c = lift_cfg(2, 2, 2);
    auto counters = std::make_shared<LiftCounters>();
    const auto strat = ensure_consecutive(
        ensure_twin_queues(ensure_right_placement(witness_strategy()), counters), counters);
    GameState s = initial_states(c).at(0);

    const auto mv1 = strat->choose(s);
    REQUIRE(mv1.has_value());
    CHECK(mv1->m == 12);  // round 1 needs no inflation

    Rng rng(99);
    std::optional<BobMove> bm = sample_legal_reply(s, *mv1, rng, 256);
    REQUIRE(bm.has_value());
    s = apply_move(s, *mv1, *bm);

    const auto mv2 = strat->choose(s);
    REQUIRE(mv2.has_value());
    // inner wants 12 children; 14 vertices exist, so (12+1)*14 beats (12-1)*15+1
    CHECK(mv2->m == 182);
    CHECK(counters->run_selections == 0);  // the first round is never scanned

    std::optional<BobMove> bm2 = cooperative_block_reply(s, *mv2, rng, 3);
    REQUIRE(bm2.has_value());
    s = apply_move(s, *mv2, *bm2);

    const auto mv3 = strat->choose(s);
    REQUIRE(mv3.has_value());
    // 196 vertices before round 3: (12+1)*196 = 2548
    CHECK(mv3->m == 2548);
    CHECK(counters->run_selections > 0);
    CHECK(counters->max_twin_classes <= 4);
    // the inner witness keeps pinning the same pair while Bob still has
    // queue choices left there, so round 3 repeats the round-2 clique
    CHECK(mv3->clique == mv2->clique);

    // the slack counter reflects the actual longest run of round-2 children
    const std::set<int> kids(s.rounds[1].children.begin(), s.rounds[1].children.end());
    std::vector<std::vector<int>> runs;
    bool open = false;
    for (int v : s.spine) {
        if (kids.count(v)) {
            if (!open) runs.emplace_back();
            open = true;
            runs.back().push_back(v);
        } else {
            open = false;
        }
    }
    const std::vector<int>* longest = nullptr;
    for (const auto& run : runs)
        if (!longest || run.size() > longest->size()) longest = &run;
    REQUIRE(longest != nullptr);
    REQUIRE(longest->size() >= 12);
    CHECK(counters->min_run_slack == static_cast<int>(longest->size()) - 12);
}

TEST_CASE("paired-start lift runs clone threads and restarts after a kill") {
    const GameConfig c = lift_cfg(2, 2, 5);
    const auto strat = ensure_paired_start(ensure_copy_diverse(pinning_chain_strategy()));
    GameState s = initial_states(c).at(0);

    // thread 0: two clone rounds over the initial clique
    auto mv = strat->choose(s);
    REQUIRE(mv.has_value());
    CHECK(mv->clique == std::vector<int>{0, 1});
    CHECK(mv->m == 1);
    auto replies = legal_bob_moves(s, *mv);
    REQUIRE(!replies.empty());
    s = apply_move(s, *mv, replies.front());

    mv = strat->choose(s);
    REQUIRE(mv.has_value());
    CHECK(mv->clique == std::vector<int>{1, 2});
    s = apply_move(s, *mv, legal_bob_moves(s, *mv).front());

    // script round 1 plays on the clone pair {2,3}
    mv = strat->choose(s);
    REQUIRE(mv.has_value());
    CHECK(mv->clique == std::vector<int>{2, 3});

    // pick a mirror-conform reply: child at the far right, distinct queues
    replies = legal_bob_moves(s, *mv);
    REQUIRE(!replies.empty());
    std::optional<BobMove> conform;
    for (const BobMove& bm : replies) {
        if (bm.spine_after.back() != 4) continue;
        GameState t = apply_move(s, *mv, bm);
        if (t.queue_of(2, 4) != t.queue_of(3, 4)) {
            conform = bm;
            break;
        }
    }
    REQUIRE(conform.has_value());
    s = apply_move(s, *mv, *conform);

    // the pinning chain now pins {clone root, newest child}; on the virtual
    // mirrored board this is the killing move, so after Bob's reply the next
    // thread starts over on the initial clique
    mv = strat->choose(s);
    REQUIRE(mv.has_value());
    CHECK(mv->clique == std::vector<int>{2, 4});
    replies = legal_bob_moves(s, *mv);
    REQUIRE(!replies.empty());  // a lone thread survives the kill round
    s = apply_move(s, *mv, replies.front());

    mv = strat->choose(s);
    REQUIRE(mv.has_value());
    CHECK(mv->clique == std::vector<int>{0, 1});

    // sequential copying is impossible: a reply that repeats the first
    // thread's clone queue on a child right of the old clones would nest the
    // old clone edge inside the new one, so no legal reply offers it
    const int old_clone_queue = s.queue_of(0, 2);
    REQUIRE(old_clone_queue >= 0);
    std::vector<int> posn(s.vertex_count());
    for (const BobMove& bm : legal_bob_moves(s, *mv)) {
        GameState t = apply_move(s, *mv, bm);
        const int child = t.vertex_count() - 1;
        std::vector<int> pos(t.vertex_count());
        for (int i = 0; i < t.vertex_count(); ++i) pos[t.spine[i]] = i;
        const bool right_of_thread0 = pos[child] > pos[2] && pos[child] > pos[3];
        if (right_of_thread0) CHECK(t.queue_of(0, child) != old_clone_queue);
    }
}

TEST_CASE("paired-start lift wins outright when ell < k") {
    const GameConfig c = lift_cfg(3, 2, 5);
    const auto strat = ensure_paired_start(ensure_copy_diverse(pinning_chain_strategy()));
    const GameOutcome o = verify_alice_wins(*strat, c);
    CHECK(o.verdict == GameVerdict::AliceWins);
    for (const WinNode& node : o.tree.nodes) {
        CHECK(node.replies.empty());
        CHECK(!node.refutations.empty());
    }
}

TEST_CASE("paired-start exhaustive search stops at the round cap") {
    GameConfig c = lift_cfg(2, 2, 5);
    c.caps.max_rounds = 8;
    c.caps.max_tree_nodes = 100000;
    const auto strat = ensure_paired_start(ensure_copy_diverse(pinning_chain_strategy()));
    const GameOutcome o = verify_alice_wins(*strat, c);
    CHECK(o.verdict == GameVerdict::CapExceeded);
}

TEST_CASE("paired-start random play stays within the queue budget") {
    const GameConfig c = lift_cfg(2, 2, 5);
    const auto strat = ensure_paired_start(ensure_copy_diverse(pinning_chain_strategy()));
    Rng rng(5150);
    int bob_dead = 0;
    for (int game = 0; game < 12; ++game) {
        GameState s = initial_states(c).at(0);
        for (int round = 0; round < 10; ++round) {
            const auto mv = strat->choose(s);
            REQUIRE(mv.has_value());
            const auto bm = sample_legal_reply(s, *mv, rng);
            if (!bm) {
                if (legal_bob_moves(s, *mv).empty()) ++bob_dead;
                break;
            }
            s = apply_move(s, *mv, *bm);
            CHECK(s.queue_count() <= 4);
        }
    }
    CHECK(bob_dead > 0);  // the squeeze kills random play well before the cap
}

TEST_CASE("lift chain composes down to the first-round game") {
    const GameConfig c = lift_cfg(2, 2, 2);
    auto counters = std::make_shared<LiftCounters>();
    const auto strat = ensure_consecutive(
        ensure_twin_queues(ensure_right_placement(witness_strategy()), counters), counters);
    CHECK(strat->name() == "consecutive-block(twin-queues(right-placement(witness)))");
    Rng rng(31);
    for (int game = 0; game < 5; ++game) {
        GameState s = initial_states(c).at(0);
        const auto mv = strat->choose(s);
        REQUIRE(mv.has_value());
        const auto bm = sample_legal_reply(s, *mv, rng, 256);
        REQUIRE(bm.has_value());
        s = apply_move(s, *mv, *bm);
        const auto mv2 = strat->choose(s);
        REQUIRE(mv2.has_value());
        REQUIRE(mv2->m == 182);
    }
    CHECK(counters->twin_selections >= 5);
    CHECK(counters->max_twin_classes <= 4);
}
