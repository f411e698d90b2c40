#ifndef QUEUELAY_BOUNDS_HPP
#define QUEUELAY_BOUNDS_HPP

#include <vector>

#include "queuelay/common.hpp"
#include "queuelay/graph.hpp"
#include "queuelay/layout.hpp"

namespace queuelay {

// Exact maximum average degree: max over nonempty subgraphs H of
// 2|E(H)|/|V(H)|. Pure integer arithmetic (iterated max-weight-closure
// min-cuts over candidate densities). Throws BoundsError on empty graphs.
Rational mad(const Graph& g);

// A vertex set achieving mad (its induced subgraph has average degree mad).
std::vector<int> densest_subgraph(const Graph& g);

// Exact Nash-Williams arboricity: max over subgraphs H with >= 2 vertices of
// ceil(|E(H)| / (|V(H)|-1)). Throws BoundsError on graphs with < 2 vertices.
int nash_williams_arboricity(const Graph& g);

// Density sandwich for the minimum per-vertex queue count, plus the related
// invariants this library checks everywhere:
//   lqn_lower = mad/4,  lqn_upper = mad/2 + 2,
//   mad/2 < arboricity_nw <= ceil(mad/2) + 1,  degeneracy >= mad/2.
// (The arboricity upper bound needs the ceiling: K5 minus an edge has
// mad = 18/5 yet needs 3 forests, exceeding mad/2 + 1 = 14/5.)
struct BoundsReport {
    Rational mad;
    int degeneracy = 0;
    int arboricity_nw = 0;
    Rational lqn_lower;  // mad / 4
    Rational lqn_upper;  // mad / 2 + 2
};
BoundsReport density_bounds(const Graph& g);

// Sparsity audit for valid layouts: every queue with >= 2 endpoints spans at
// most 2|V_Q| - 3 edges. Returns the violating queue ids (empty for any
// layout that validates; a non-empty result indicates an internal bug).
// Throws BoundsError when the layout does not validate.
std::vector<int> queue_edge_bound_check(const Graph& g, const QueueLayout& L);

}  // namespace queuelay

#endif
