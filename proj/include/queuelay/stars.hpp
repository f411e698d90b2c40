#ifndef QUEUELAY_STARS_HPP
#define QUEUELAY_STARS_HPP

#include <vector>

#include "queuelay/construction.hpp"
#include "queuelay/graph.hpp"
#include "queuelay/layout.hpp"

namespace queuelay {

// Edge partitions whose classes are stars. Entry i is the class (= center
// vertex) of Graph::edges()[i]. A star never contains two nesting edges, so
// any star partition is a valid queue assignment under every spine order;
// only the per-vertex class count (locality) varies.

// Center = smaller endpoint. On a graph whose ids are construction order of
// a k-tree this touches at most k+1 classes per vertex.
std::vector<int> min_endpoint_stars(const Graph& g);

// Center = the endpoint removed later during min-degree elimination with
// largest-id tie-breaking. Touches at most degeneracy+1 classes per vertex.
// On k-trees in construction order the elimination is exactly reverse
// construction order, so this reproduces min_endpoint_stars.
std::vector<int> degeneracy_stars(const Graph& g);

// Max per-vertex class count of a partition (what locality a star layout
// built from it will have, under any order).
int partition_locality(const Graph& g, const std::vector<int>& stars);

// Layout from a star partition: given order, classes canonically relabeled.
QueueLayout star_layout(const Graph& g, const std::vector<int>& stars,
                        const LinearOrder& ord);

// Construction-order layout of a k-tree: identity spine, min-endpoint stars.
QueueLayout construction_order_layout(const Graph& g);

// Single-queue layout of a tree: breadth-first discovery order from root.
// Throws GraphError when g is not a tree.
QueueLayout bfs_tree_layout(const Graph& g, int root);

}  // namespace queuelay

#endif
