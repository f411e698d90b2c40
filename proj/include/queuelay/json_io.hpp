#ifndef QUEUELAY_JSON_IO_HPP
#define QUEUELAY_JSON_IO_HPP

#include <string>
#include <vector>

#include "queuelay/bounds.hpp"
#include "queuelay/certificates.hpp"
#include "queuelay/construction.hpp"
#include "queuelay/game.hpp"
#include "queuelay/graph.hpp"
#include "queuelay/layout.hpp"
#include "queuelay/solver.hpp"

namespace queuelay {

// JSON forms for every artifact the tool emits. Every document carries
// "schema": "queuelay/1" and every parser demands it. Emission is
// deterministic -- fixed key order, integers only, no timestamps -- and
// each emitter's output parses back to an equal value. Parsers throw
// ParseError on malformed input.

// {"schema","k","init":[...],"steps":[{"parent":[...],"child":n},...]}
std::string construction_to_json(const ConstructionSequence& seq);
ConstructionSequence construction_from_json(const std::string& text);

// {"schema","order":[...],"queues":{"u-v":qid,...}} with u < v in keys.
// The graph maps keys back to edge indices; emit-then-parse is the
// identity on (order, queue_of).
std::string layout_to_json(const Graph& g, const QueueLayout& L);
QueueLayout layout_from_json(const Graph& g, const std::string& text);

// {"schema","stars":[{"center":v,"edges":["u-v",...]},...]}, one entry per
// distinct class, centers ascending. `stars` is the per-edge class vector.
std::string stars_to_json(const Graph& g, const std::vector<int>& stars);
std::vector<int> stars_from_json(const Graph& g, const std::string& text);

// Rationals serialize as {"num","den"} in lowest terms.
std::string bounds_to_json(const BoundsReport& r);
BoundsReport bounds_from_json(const std::string& text);

// {"schema","value","exact","nodes","witness":{layout}}. Wall-clock stats
// never serialize; node counts are deterministic, so artifacts are too.
std::string solve_to_json(const Graph& g, const SolveResult& r);
SolveResult solve_from_json(const Graph& g, const std::string& text);

// {"schema","result":"ok"} or "rainbow" with the nesting pair, or
// "locality" with the crowded vertex and its queues.
std::string validation_to_json(const ValidationResult& r);
ValidationResult validation_from_json(const std::string& text);

std::string non_nesting_to_json(const NonNestingWitness& w);
NonNestingWitness non_nesting_from_json(const std::string& text);
std::string rainbow_to_json(const RainbowWitness& w);
RainbowWitness rainbow_from_json(const std::string& text);

// Full game position, field for field.
std::string game_state_to_json(const GameState& s);
GameState game_state_from_json(const std::string& text);

// Win trees serialize the moves and replies, not the positions: the parser
// replays them through apply_move from the recorded config's initial
// states, so a parsed tree carries exactly the states the emitter saw.
// prune keeps at most one refutation per leaf (a compact witness form that
// still parses).
std::string win_tree_to_json(const WinTree& t, bool prune = false);
WinTree win_tree_from_json(const std::string& text);

std::string counter_to_json(const CounterLayout& c);
CounterLayout counter_from_json(const std::string& text);

// {"schema","k","demands","rounds_materialized","verified","note","seq"}
std::string composed_to_json(const ComposedLowerBound& c);
ComposedLowerBound composed_from_json(const std::string& text);

}  // namespace queuelay

#endif
