#ifndef QUEUELAY_STRATEGIES_HPP
#define QUEUELAY_STRATEGIES_HPP

#include <memory>

#include "queuelay/game.hpp"

namespace queuelay {

// Alice strategy for the single-clique game at k=2, locality 2, level 5.
// Follows a fixed five-move script while Bob keeps every child edge away
// from its parent clique's queue. The first reply that reuses a parent
// queue saturates two vertices; from there every later edge is stuck in
// those two queues, and a memoized search over that two-queue subgame
// drives Bob into a position with no valid reply. Concedes (returns
// nullopt) rather than guess if a position falls outside this analysis.
std::unique_ptr<Strategy> witness_strategy();

// Alice strategy for the paired game at level 7 (any k, any locality).
// Keeps growing from a clique that contains the leftmost initial vertex v
// and the newest child. Mirrored-edge diversity forces each new edge at v
// into a queue different from all earlier edges at v, so v's locality
// climbs by one per round until no reply stays within the bound.
std::unique_ptr<Strategy> pinning_chain_strategy();

}  // namespace queuelay

#endif
