#include "queuelay/construction.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace queuelay {

namespace {

std::string step_label(std::size_t i) { return "step " + std::to_string(i); }

}  // namespace

void validate_construction(const ConstructionSequence& seq) {
    if (seq.k < 1) throw ConstructionError("k must be at least 1");
    if (static_cast<int>(seq.init.size()) != seq.k + 1)
        throw ConstructionError("initial clique must have k+1 vertices");
    for (int i = 0; i <= seq.k; ++i)
        if (seq.init[i] != i)
            throw ConstructionError("initial clique must be {0..k} in order");

    // adjacency over dense ids as we grow
    const int n = seq.vertex_count();
    std::vector<std::set<int>> adj(n);
    for (int a = 0; a <= seq.k; ++a)
        for (int b = a + 1; b <= seq.k; ++b) {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    int next = seq.k + 1;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const ConstructionStep& st = seq.steps[i];
        if (st.child != next)
            throw ConstructionError(step_label(i) + ": child must be " +
                                    std::to_string(next) + ", got " +
                                    std::to_string(st.child));
        if (static_cast<int>(st.parent_clique.size()) != seq.k)
            throw ConstructionError(step_label(i) + ": parent clique must have k vertices");
        for (std::size_t a = 0; a < st.parent_clique.size(); ++a) {
            int v = st.parent_clique[a];
            if (v < 0 || v >= next)
                throw ConstructionError(step_label(i) + ": parent vertex " +
                                        std::to_string(v) + " not yet present");
            if (a > 0 && st.parent_clique[a - 1] >= v)
                throw ConstructionError(step_label(i) + ": parent clique must be ascending");
        }
        for (std::size_t a = 0; a < st.parent_clique.size(); ++a)
            for (std::size_t b = a + 1; b < st.parent_clique.size(); ++b)
                if (!adj[st.parent_clique[a]].count(st.parent_clique[b]))
                    throw ConstructionError(step_label(i) + ": parent vertices " +
                                            std::to_string(st.parent_clique[a]) + " and " +
                                            std::to_string(st.parent_clique[b]) +
                                            " are not adjacent");
        for (int v : st.parent_clique) {
            adj[v].insert(st.child);
            adj[st.child].insert(v);
        }
        ++next;
    }
}

Graph expand_construction(const ConstructionSequence& seq) {
    validate_construction(seq);
    std::vector<Edge> edges;
    for (int a = 0; a <= seq.k; ++a)
        for (int b = a + 1; b <= seq.k; ++b) edges.emplace_back(a, b);
    for (const ConstructionStep& st : seq.steps)
        for (int v : st.parent_clique) edges.emplace_back(v, st.child);
    return Graph(seq.vertex_count(), std::move(edges));
}

long long ktree_edge_count(int k, long long n) {
    if (n < k + 1) throw ConstructionError("k-tree needs at least k+1 vertices");
    return static_cast<long long>(k) * n - static_cast<long long>(k) * (k + 1) / 2;
}

std::optional<int> edge_depth(const EdgeDepthMap& depths, int u, int v) {
    auto it = depths.find(edge_key(u, v));
    if (it == depths.end()) return std::nullopt;
    return it->second;
}

FanoutTwoTree fanout_two_tree(int arity, int depth, long long vertex_cap) {
    if (arity < 1) throw ConstructionError("fanout arity must be at least 1");
    if (depth < 0) throw ConstructionError("fanout depth must be non-negative");

    // Every edge of depth i < depth gets `arity` children; each child brings
    // two edges of depth i+1. Edge count per level: (2*arity)^i.
    long long vertices = 3, level_edges = 1;
    for (int i = 0; i < depth; ++i) {
        vertices += static_cast<long long>(arity) * level_edges;
        if (vertices > vertex_cap)
            throw SizeOverflowError("fanout tree would exceed " +
                                    std::to_string(vertex_cap) + " vertices");
        if (level_edges > vertex_cap) // guard the multiplication below too
            throw SizeOverflowError("fanout tree would exceed " +
                                    std::to_string(vertex_cap) + " vertices");
        level_edges *= 2LL * arity;
    }

    FanoutTwoTree out;
    out.arity = arity;
    out.depth = depth;
    out.seq.k = 2;
    out.seq.init = {0, 1, 2};
    out.depths[edge_key(0, 1)] = 0;
    // {0,2} and {1,2} spawn nothing: no depth entry.

    std::vector<std::pair<int, int>> frontier = {{0, 1}};  // depth-i edges
    int next = 3;
    for (int level = 0; level < depth; ++level) {
        std::vector<std::pair<int, int>> next_frontier;
        next_frontier.reserve(frontier.size() * 2 * arity);
        for (auto [u, v] : frontier) {
            for (int c = 0; c < arity; ++c) {
                int x = next++;
                out.seq.steps.push_back({{u, v}, x});
                out.depths[edge_key(u, x)] = level + 1;
                out.depths[edge_key(v, x)] = level + 1;
                next_frontier.emplace_back(u, x);
                next_frontier.emplace_back(v, x);
            }
        }
        frontier = std::move(next_frontier);
    }
    return out;
}

std::unordered_map<std::uint64_t, std::vector<int>> children_by_parent_edge(
    const ConstructionSequence& seq) {
    if (seq.k != 2) throw ConstructionError("parent-edge map is only defined for 2-trees");
    std::unordered_map<std::uint64_t, std::vector<int>> out;
    for (const ConstructionStep& st : seq.steps)
        out[edge_key(st.parent_clique[0], st.parent_clique[1])].push_back(st.child);
    return out;
}

ConstructionSequence witness_two_tree() {
    ConstructionSequence seq;
    seq.k = 2;
    seq.init = {0, 1, 2};
    seq.steps = {
        {{0, 2}, 3},
        {{0, 3}, 4},
        {{2, 3}, 5},
        {{2, 5}, 6},
    };
    validate_construction(seq);
    return seq;
}

ConstructionSequence shared_clique_family(int k, int children) {
    if (children < 0) throw ConstructionError("children count must be non-negative");
    ConstructionSequence seq;
    seq.k = k;
    seq.init.resize(k + 1);
    for (int i = 0; i <= k; ++i) seq.init[i] = i;
    std::vector<int> parent(k);
    for (int i = 0; i < k; ++i) parent[i] = i;
    for (int c = 0; c < children; ++c) seq.steps.push_back({parent, k + 1 + c});
    validate_construction(seq);
    return seq;
}

ConstructionSequence random_ktree(int k, int n, Rng& rng) {
    if (k < 1) throw ConstructionError("k must be at least 1");
    if (n < k + 1) throw ConstructionError("k-tree needs at least k+1 vertices");
    ConstructionSequence seq;
    seq.k = k;
    seq.init.resize(k + 1);
    for (int i = 0; i <= k; ++i) seq.init[i] = i;

    // all k-cliques present so far
    std::vector<std::vector<int>> cliques;
    for (int skip = 0; skip <= k; ++skip) {
        std::vector<int> c;
        for (int i = 0; i <= k; ++i)
            if (i != skip) c.push_back(i);
        cliques.push_back(std::move(c));
    }
    for (int x = k + 1; x < n; ++x) {
        const std::vector<int> parent = cliques[rng.below_int(static_cast<int>(cliques.size()))];
        seq.steps.push_back({parent, x});
        for (int skip = 0; skip < k; ++skip) {
            std::vector<int> c;
            for (int i = 0; i < k; ++i)
                if (i != skip) c.push_back(parent[i]);
            c.push_back(x);  // x is the largest id, so still ascending
            cliques.push_back(std::move(c));
        }
    }
    validate_construction(seq);
    return seq;
}

}  // namespace queuelay
