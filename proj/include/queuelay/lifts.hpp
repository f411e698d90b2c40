#ifndef QUEUELAY_LIFTS_HPP
#define QUEUELAY_LIFTS_HPP

#include <climits>
#include <memory>

#include "queuelay/game.hpp"

namespace queuelay {

// Counters filled in while lifted strategies post-process Bob's replies.
// Both pigeonholes are guaranteed to succeed on legal replies -- a failure
// throws PigeonholeError and means the engine is broken -- so the counters
// exist to let tests measure the actual slack on real runs instead of taking
// the bound on faith.  Replaying a position re-runs the selection for every
// past round, so the fields count selection passes, not distinct rounds.
struct LiftCounters {
    long long twin_selections = 0;  // passes that grouped children by queue tuple
    int max_twin_classes = 0;       // most distinct queue tuples seen in one pass
    long long run_selections = 0;   // passes that scanned for a consecutive child run
    int min_run_slack = INT_MAX;    // worst (longest run - children needed) observed
};

// Each wrapper below turns a strategy for the game one level up into a
// strategy for the level below it.  The wrapped strategy asks for more
// children per round than the inner one needs; after Bob replies, the wrapper
// keeps only a subset that provably satisfies the extra condition of the
// higher level and feeds the induced sub-game to the inner strategy.  The
// sub-game is rebuilt from scratch on every call by replaying the recorded
// rounds, so wrappers carry no mutable state across branches of a game tree.

// Level 4 -> level 5: asks for two extra children per round and keeps the
// middle ones.  The two dropped sentinels bracket the survivors, which forces
// every kept child to the right of its parent clique and forces the per-child
// edges into pairwise different queues; a reply where that fails would contain
// a same-queue nesting pair and be rejected as illegal before reaching the
// strategy, so an observed failure throws PigeonholeError.  The placement
// argument needs a clique member younger than the initial clique once round 1
// has happened; picking an all-initial clique later is therefore refused with
// GameError.
std::unique_ptr<Strategy> ensure_right_placement(std::unique_ptr<Strategy> inner);

// Level 3 -> level 4: multiplies the requested child count by ell^k and keeps
// the largest group of children whose edges to the parent clique use the same
// queue tuple.  At most ell^k distinct tuples fit through the locality bound
// at the clique vertices, so the largest group is always big enough.
std::unique_ptr<Strategy> ensure_twin_queues(std::unique_ptr<Strategy> inner,
                                             std::shared_ptr<LiftCounters> counters = nullptr);

// Level 2 -> level 3: asks for max((m+1)*V, (m-1)*(V+1)+1) children, where V
// is the number of vertices before the round, and keeps a run of m children
// that is consecutive on the spine among the vertices present so far.  The V
// old vertices can split the children into at most V+1 runs, so some run has
// at least m members.  Round 1 needs no inflation: its children sit right of
// the initial clique, and nothing else exists to interleave.
std::unique_ptr<Strategy> ensure_consecutive(std::unique_ptr<Strategy> inner,
                                             std::shared_ptr<LiftCounters> counters = nullptr);

// Level 6 -> level 7: the identity lift.  For a mirrored pair, reusing the
// queue of a clique edge on a later child of the edge's spine-first endpoint
// nests the mirrored copy inside the new edge, so every legal level-6 reply
// already satisfies the extra diversity condition; the wrapper asserts that
// and passes the inner strategy's move through unchanged.
std::unique_ptr<Strategy> ensure_copy_diverse(std::unique_ptr<Strategy> inner);

// Level 5 -> level 6: plays the single-clique game by growing clique clones
// one thread at a time.  A thread creates k clone vertices over the initial
// clique, then replays the inner mirrored-game strategy against a virtual
// paired board whose right half mirrors the thread; the thread ends when the
// virtual board leaves the inner strategy's opponent no legal reply, or when
// Bob's replies stop being expressible as mirrored play.  Completed threads
// are grouped by their full queue history: with ell == k every queue touches
// the initial clique, so at most k*k queues exist and the history alphabet is
// finite, which forces Bob to either abandon a pattern (shrinking his options)
// or complete two identical threads -- and the union of two identical threads
// always contains a same-queue nesting, so a completed match is impossible in
// legal play and throws PigeonholeError.  With ell < k the game is already
// lost for Bob (each child needs k pairwise different queues) and the wrapper
// just opens with the initial clique.  The inner strategy must base its
// choices only on the structure and spine of the state it is shown, never on
// absolute queue ids, so that matched threads replay identically.
std::unique_ptr<Strategy> ensure_paired_start(std::unique_ptr<Strategy> inner);

}  // namespace queuelay

#endif
