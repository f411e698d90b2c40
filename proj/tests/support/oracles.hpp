#ifndef QUEUELAY_TESTS_ORACLES_HPP
#define QUEUELAY_TESTS_ORACLES_HPP

#include <optional>
#include <vector>

#include "queuelay/common.hpp"
#include "queuelay/game.hpp"
#include "queuelay/graph.hpp"
#include "queuelay/layout.hpp"

// Deliberately naive reimplementations used as ground truth. Each one takes
// a different algorithmic route from the library code it checks.
namespace queuelay_tests {

// max over all nonempty vertex subsets of 2 e(S)/|S|; n <= 20.
queuelay::Rational brute_mad(const queuelay::Graph& g);

// max over subsets with >= 2 vertices of ceil(e(S)/(|S|-1)); n <= 20.
int brute_arboricity(const queuelay::Graph& g);

// longest-path DP over the explicit "encloses" DAG (library uses patience
// sorting instead).
int naive_max_rainbow(const queuelay::Graph& g, const queuelay::LinearOrder& ord);

// all-pairs nesting scan + per-vertex queue sets.
bool naive_layout_valid(const queuelay::Graph& g, const queuelay::QueueLayout& L,
                        std::optional<int> ell);

// Ground truth for the game engine's reply generator: enumerates every
// canonically labeled reply by brute force (all three-way spine merges, all
// queue assignments under the minimal-fresh-id rule), builds the successor
// with its own bookkeeping, and keeps replies passing direct quadratic
// restatements of the active conditions (except the layout condition).
std::vector<queuelay::BobMove> naive_bob_replies(const queuelay::GameState& s,
                                                 const queuelay::AliceMove& mv);

// The subset of naive_bob_replies whose successor also passes
// naive_layout_valid at the state's locality bound.
std::vector<queuelay::BobMove> naive_legal_bob_replies(const queuelay::GameState& s,
                                                       const queuelay::AliceMove& mv);

}  // namespace queuelay_tests

#endif
