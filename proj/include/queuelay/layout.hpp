#ifndef QUEUELAY_LAYOUT_HPP
#define QUEUELAY_LAYOUT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "queuelay/graph.hpp"

namespace queuelay {

// Total order on the vertices of a graph, kept as both rank->vertex and
// vertex->rank so lookups in either direction are O(1).
class LinearOrder {
public:
    LinearOrder() = default;
    static LinearOrder identity(int n);
    static LinearOrder from_sequence(std::vector<int> seq);

    int size() const { return static_cast<int>(seq_.size()); }
    int rank(int v) const;
    int vertex_at(int r) const;
    const std::vector<int>& sequence() const { return seq_; }
    LinearOrder reversed() const;

private:
    std::vector<int> seq_;   // rank -> vertex
    std::vector<int> rank_;  // vertex -> rank
};

// Queue layout of a particular Graph: a spine order plus one queue id per
// edge, aligned with Graph::edges() by index. Queue ids need not be
// contiguous; canonical_queue_relabel makes them so.
struct QueueLayout {
    LinearOrder order;
    std::vector<int> queue_of;

    int queue_count() const;
};

// Two edges nest iff the span of one strictly contains the span of the
// other; edges sharing an endpoint never nest.
bool nests(const Edge& a, const Edge& b, const LinearOrder& ord);
// Two edges cross iff their spans overlap without containment and they share
// no endpoint.
bool crosses(const Edge& a, const Edge& b, const LinearOrder& ord);

// Rank interval [lo, hi] covered by a set of vertices.
std::pair<int, int> span(const std::vector<int>& vertices, const LinearOrder& ord);
// v lies strictly inside the span of `vertices` (and is not one of them).
bool below(int v, const std::vector<int>& vertices, const LinearOrder& ord);
// v lies strictly outside the span of `vertices`.
bool outside(int v, const std::vector<int>& vertices, const LinearOrder& ord);

struct ValidationOk {};
struct RainbowViolation {
    Edge a, b;  // a nests over b
    int queue = 0;
};
struct LocalityViolation {
    int vertex = 0;
    std::vector<int> queues;  // distinct queues incident to vertex
};
using ValidationResult = std::variant<ValidationOk, RainbowViolation, LocalityViolation>;

inline bool validation_ok(const ValidationResult& r) {
    return std::holds_alternative<ValidationOk>(r);
}
std::string describe(const ValidationResult& r);

// Checks that no two edges of a common queue nest, and (when ell is given)
// that every vertex has incident edges in at most ell distinct queues.
// Throws CoverageError when the assignment does not cover the edge set.
ValidationResult validate_layout(const Graph& g, const QueueLayout& L,
                                 std::optional<int> ell = std::nullopt);

// Number of distinct queues on edges incident to v.
int locality(const Graph& g, const QueueLayout& L, int v);
// Maximum locality over all vertices (0 for edgeless graphs).
int layout_locality(const Graph& g, const QueueLayout& L);

// k pairwise nesting edges, innermost last; queue is set when the witness is
// monochromatic.
struct RainbowWitness {
    std::vector<Edge> edges;
    std::optional<int> queue;
};

// Size of the largest set of pairwise nesting edges under ord, plus a
// witness chain. O(m log m): sort by (left rank asc, right rank asc) and take
// the longest strictly decreasing subsequence of right ranks.
struct RainbowResult {
    int size = 0;
    RainbowWitness witness;
};
RainbowResult max_rainbow(const Graph& g, const LinearOrder& ord);

// True if `w` re-verifies: pairwise nesting under ord, and monochromatic in
// L when w.queue is set.
bool rainbow_witness_ok(const RainbowWitness& w, const LinearOrder& ord,
                        const QueueLayout* L = nullptr, const Graph* g = nullptr);

// Relabels queue ids by first occurrence when edges are scanned in
// (left rank, right rank) order; empty queues disappear. Applied to every
// layout the library emits, so equal layouts compare equal.
QueueLayout canonical_queue_relabel(const Graph& g, const QueueLayout& L);

}  // namespace queuelay

#endif
