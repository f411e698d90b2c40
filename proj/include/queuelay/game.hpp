#ifndef QUEUELAY_GAME_HPP
#define QUEUELAY_GAME_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "queuelay/common.hpp"
#include "queuelay/graph.hpp"
#include "queuelay/layout.hpp"

namespace queuelay {

// Limits for the adversarial search. All limits are structural (counts, not
// wall time), so runs are reproducible.
struct GameCaps {
    int max_vertices = 64;
    int max_rounds = 10;
    long long max_tree_nodes = 200000;
};

// One adversarial build-and-layout game. Alice grows a k-tree clique by
// clique; Bob must extend a spine order and queue assignment as vertices
// arrive. `level` selects how many reply conditions bind Bob (cumulative):
//
//   1  the running layout stays a valid ell-local queue layout
//   2  round-1 children sit right of the initial clique
//   3  each round's children occupy one block: no older vertex inside
//   4  edges from one clique vertex to same-round children share a queue
//   5  children sit right of their parent clique, and each child's k edges
//      get pairwise different queues
//   6  the game runs on two mirrored components; mirrored cliques alternate
//      on the spine, mirrored children follow their cliques' order, and
//      mirrored edges share queues
//   7  a child edge whose child sits right of an edge and that edge's mirror
//      avoids that edge's queue
//
// Levels 6 and 7 play on the mirrored double setup; lower levels use a
// single initial clique. Bob loses when no legal reply exists.
struct GameConfig {
    int k = 2;
    int ell = 2;
    int level = 5;
    GameCaps caps;

    bool paired() const { return level >= 6; }
};

// Each round on the record: the clique Alice chose and the children Bob
// inserted, sorted by spine position. Paired games track both components.
struct RoundRecord {
    std::vector<int> clique;       // ascending vertex ids
    std::vector<int> clique_copy;  // paired games only, else empty
    std::vector<int> children;
    std::vector<int> children_copy;
};

// Full game position. Vertex ids are dense in insertion order: initial
// clique(s) first, then per round the left-component children in spine
// order, then (paired) the right-component children. equeue[i] is the queue
// of edges[i]; queue ids are dense, 0-based, in first-use order.
struct GameState {
    GameConfig config;
    std::vector<int> spine;   // vertex ids in spine order
    std::vector<Edge> edges;  // insertion order, not sorted
    std::vector<int> equeue;
    std::vector<int> side;     // per vertex: 0 = left component, 1 = right
    std::vector<int> copy_of;  // per vertex: mirrored vertex, or -1
    std::vector<int> born;     // per vertex: round that added it (0 = initial)
    std::vector<std::vector<int>> parent;  // per vertex: parent clique, ascending
    std::vector<RoundRecord> rounds;

    int vertex_count() const { return static_cast<int>(side.size()); }
    int round_count() const { return static_cast<int>(rounds.size()); }
    int queue_count() const;
    // Queue of edge {u, v}, or -1 when absent.
    int queue_of(int u, int v) const;
    LinearOrder order() const;
    Graph graph() const;
    // Queue assignment aligned with graph().edges().
    QueueLayout layout(const Graph& g) const;
    bool is_clique(const std::vector<int>& vertices) const;
    // All k-cliques of one component, ascending ids, deterministic order.
    std::vector<std::vector<int>> cliques(int side_filter = -1) const;
};

// Alice's move: an existing k-clique of the left component (the mirrored
// clique is implied in paired games) and the number of children to attach.
struct AliceMove {
    std::vector<int> clique;  // ascending vertex ids
    int m = 1;
};

// Bob's reply. spine_after is the previous spine with the fresh vertex ids
// spliced in; fresh ids are assigned left-to-right per component, so labels
// are canonical. queues holds one id per fresh edge: left children in id
// order, each child's edges by ascending clique vertex, then the right
// component in the same pattern. A fresh queue must take the smallest unused
// id at its slot, so equal replies encode identically.
struct BobMove {
    std::vector<int> spine_after;
    std::vector<int> queues;
};

// Positions the new round described by (mv, reply) onto `s` and returns the
// resulting state. Validates shape only (clique membership, id density,
// spine extension, queue id canonicality), not the game conditions; throws
// GameError on malformed input.
GameState apply_move(const GameState& s, const AliceMove& mv, const BobMove& reply);

// True when active condition `c` (2..7) holds for the whole state; inactive
// conditions count as satisfied. Condition 1 is validate_layout on
// graph()/layout() with config.ell.
bool condition_holds(const GameState& s, int c);
// First violated active condition (1..level), or 0 when the state is fully
// legal. fault receives the layout fault when condition 1 is the answer.
int first_violated_condition(const GameState& s, ValidationResult* fault = nullptr);

// Replies that extend the state per (mv) and satisfy every active condition
// except possibly condition 1. Canonically ordered and deduplicated.
std::vector<BobMove> reply_candidates(const GameState& s, const AliceMove& mv);
// The subset of reply_candidates whose resulting layout also validates.
std::vector<BobMove> legal_bob_moves(const GameState& s, const AliceMove& mv);

// Draws one legal reply without enumerating them all: a random admissible
// placement, then queues slot by slot among choices that keep the partial
// layout valid, retrying on dead ends. Usable at sizes far beyond
// legal_bob_moves. nullopt means the retry budget ran out, not that no legal
// reply exists.
std::optional<BobMove> sample_legal_reply(const GameState& s, const AliceMove& mv, Rng& rng,
                                          int retries = 64);

// Starting positions, one per distinct queue assignment of the initial
// clique edges up to queue relabeling, keeping only valid layouts. Paired
// games pin the alternating spine, mirror the left assignment onto the right
// clique, and thereby also quotient the left/right exchange.
std::vector<GameState> initial_states(const GameConfig& config);

/// Evidence attached to a lost position: a reply that passes every active
// structural condition but breaks the layout condition, with the fault.
struct LeafRefutation {
    BobMove reply;
    ValidationResult fault;
};

// Node of a strategy-verification tree. Internal nodes enumerate every legal
// reply; a leaf has no legal reply and carries the refutations instead.
struct WinNode {
    GameState state;  // position before Alice's move
    AliceMove move;
    std::vector<BobMove> replies;
    std::vector<int> children;  // indices into WinTree::nodes, one per reply
    std::vector<LeafRefutation> refutations;
};

struct WinTree {
    GameConfig config;
    std::vector<WinNode> nodes;
    std::vector<int> roots;  // one per initial position
};

// A position the strategy failed to beat: Bob holds a fully legal state and
// the strategy produced no move for it.
struct CounterLayout {
    GameState state;
    std::string reason;
};

enum class GameVerdict { AliceWins, BobSurvives, CapExceeded };

struct GameOutcome {
    GameVerdict verdict = GameVerdict::CapExceeded;
    WinTree tree;  // partial when a cap was hit
    std::optional<CounterLayout> counter;
    long long nodes_expanded = 0;
};

class Strategy {
public:
    virtual ~Strategy() = default;
    virtual std::string name() const = 0;
    // Alice's move for the position, or nullopt to concede it.
    virtual std::optional<AliceMove> choose(const GameState& s) const = 0;
};

// Plays `strategy` against every legal Bob reply from every starting
// position (or from `initial` when given). Alice wins iff every branch ends
// in a position with no legal reply. Cap overruns end the search with the
// partial tree; a malformed strategy move throws GameError.
GameOutcome verify_alice_wins(const Strategy& strategy, const GameConfig& config,
                              const std::vector<GameState>* initial = nullptr);

}  // namespace queuelay

#endif
