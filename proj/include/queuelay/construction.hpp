#ifndef QUEUELAY_CONSTRUCTION_HPP
#define QUEUELAY_CONSTRUCTION_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "queuelay/common.hpp"
#include "queuelay/graph.hpp"

namespace queuelay {

// Build recipe for a k-tree: an initial (k+1)-clique followed by steps that
// each attach a fresh vertex to an existing k-clique. Vertex ids are dense
// in construction order: init is {0..k}, step i adds vertex k+1+i.
struct ConstructionStep {
    std::vector<int> parent_clique;  // k vertex ids, ascending
    int child = -1;
};

struct ConstructionSequence {
    int k = 0;
    std::vector<int> init;  // exactly {0..k}
    std::vector<ConstructionStep> steps;

    int vertex_count() const { return k + 1 + static_cast<int>(steps.size()); }
};

// Throws ConstructionError unless ids are dense, parents are k-cliques of
// already-present vertices, and children arrive in order.
void validate_construction(const ConstructionSequence& seq);

// Expands to the k-tree it describes. Validates first.
Graph expand_construction(const ConstructionSequence& seq);

// Edge count of any k-tree on n vertices: k*n - k*(k+1)/2.
long long ktree_edge_count(int k, long long n);

// Depth labels for edges of a generated tree, keyed by edge_key(u, v).
// Edges without an entry never spawn children.
using EdgeDepthMap = std::unordered_map<std::uint64_t, int>;
std::optional<int> edge_depth(const EdgeDepthMap& depths, int u, int v);

// 2-tree grown by repeated fanout: a base triangle {0,1,2} whose edge {0,1}
// has depth 0, then every edge of depth i < depth gets `arity` fresh child
// vertices, whose two edges have depth i+1. The other two base edges spawn
// nothing. Throws SizeOverflowError if the result would exceed vertex_cap.
struct FanoutTwoTree {
    ConstructionSequence seq;
    EdgeDepthMap depths;
    int arity = 0;
    int depth = 0;
};
FanoutTwoTree fanout_two_tree(int arity, int depth, long long vertex_cap = 5'000'000);

// For 2-trees: children attached to each edge, keyed by edge_key.
std::unordered_map<std::uint64_t, std::vector<int>> children_by_parent_edge(
    const ConstructionSequence& seq);

// Fixed 7-vertex 2-tree used as the adversarial-game witness instance.
ConstructionSequence witness_two_tree();

// k-tree consisting of an initial clique plus `children` vertices all
// attached to the same k-subclique {0..k-1}.
ConstructionSequence shared_clique_family(int k, int children);

// Uniformly random k-tree: each new vertex attaches to a k-clique chosen
// uniformly among all k-cliques present so far.
ConstructionSequence random_ktree(int k, int n, Rng& rng);

}  // namespace queuelay

#endif
