#ifndef QUEUELAY_SOLVER_HPP
#define QUEUELAY_SOLVER_HPP

#include <cstdint>
#include <limits>
#include <optional>

#include "queuelay/graph.hpp"
#include "queuelay/layout.hpp"

namespace queuelay {

// Deterministic search budget. Node counts are the contract (identical
// budgets give identical results); wall-clock is a safety valve for CLI use
// and can make a run end early with exact=false.
struct SolveBudget {
    long long max_nodes = std::numeric_limits<long long>::max();
    double max_millis = 0;  // 0 = unlimited
    int vertex_cap = 10;    // refuse larger instances outright
};

struct SolveStats {
    long long nodes = 0;
    double millis = 0;  // informational; never serialized
};

struct SolveResult {
    int value = 0;
    QueueLayout witness;
    bool exact = true;
    SolveStats stats;
};

// Fewest queues for a fixed spine order. Equals max_rainbow(g, ord); the
// witness assigns each edge its nesting depth (1 + deepest chain of edges
// strictly enclosing it), which uses exactly that many queues.
SolveResult min_queues_for_order(const Graph& g, const LinearOrder& ord);

// A layout with spine `ord` where every vertex meets at most ell queues, or
// nullopt when none exists. Exhaustive backtracking over canonical queue
// assignments: edges processed by (left rank, right rank); each edge joins a
// compatible existing queue or one canonical fresh queue.
std::optional<QueueLayout> min_locality_for_order(const Graph& g, const LinearOrder& ord,
                                                  int ell, SolveStats* stats = nullptr,
                                                  const SolveBudget* budget = nullptr);

// Minimum over all spine orders of the per-vertex queue count (iterative
// deepening; orders enumerated up to reversal). Exact unless the budget ran
// out, in which case the best-known upper bound is returned with exact=false.
// Throws BudgetError when the graph exceeds budget.vertex_cap.
SolveResult exact_lqn(const Graph& g, const SolveBudget& budget = {});

// Minimum over all spine orders of max_rainbow: the exact queue number.
SolveResult exact_qn(const Graph& g, const SolveBudget& budget = {});

}  // namespace queuelay

#endif
