#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace kirchcert {

struct DisconnectedGraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Edge between 1-based vertices; loops (u == v) and parallel edges are
// allowed.  The optional label is carried through reports.
struct Edge {
    int u = 0;
    int v = 0;
    std::string label;
};

// Finite multigraph with an ordered edge list.  Edge k (1-based) corresponds
// everywhere to polynomial variable x_k, so edge order is part of the data.
// At most 64 edges (edge subsets are handled as bitmasks).
class Graph {
public:
    Graph(int num_vertices, std::vector<Edge> edges);

    // Complete graph K_m, m >= 2, edges in lexicographic order:
    // (1,2), (1,3), ..., (1,m), (2,3), ..., (m-1,m).
    static Graph complete(int num_vertices);

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const;  // 1-based
    bool is_loop(int index) const;
    bool is_connected() const;  // every vertex in one component (isolated vertices count)

    std::string str() const;  // "p <nv> <ne>" header plus one "e u v [label]" line per edge

private:
    int num_vertices_;
    std::vector<Edge> edges_;
};

struct SimplicityReport {
    bool simple = true;
    std::vector<int> loops;                         // 1-based edge indices
    std::vector<std::pair<int, int>> parallel_pairs;  // index pairs, i < j
};

SimplicityReport simplicity_check(const Graph& g);

// Resolves a builtin graph name; currently "K<m>" for m >= 2.
Graph build_graph(const std::string& name);

// Text format: optional '#' comment lines, one "p <num_vertices> <num_edges>"
// header, then exactly num_edges lines "e <u> <v> [label]".
Graph parse_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

// The set of spanning trees of a graph, each tree an edge-index bitmask
// (bit k-1 set iff edge k belongs to the tree).  Masks are sorted ascending,
// which fixes the enumeration order used in reports and generating functions.
class SpanningTreeSet {
public:
    SpanningTreeSet(std::vector<std::uint64_t> masks, int num_edges);

    std::size_t count() const { return masks_.size(); }
    int num_edges() const { return num_edges_; }
    const std::vector<std::uint64_t>& masks() const { return masks_; }
    bool contains(std::uint64_t mask) const;
    std::vector<std::vector<int>> as_index_sets() const;  // 1-based edge indices

private:
    std::vector<std::uint64_t> masks_;
    int num_edges_;
};

// Deletion/contraction enumeration with connectivity pruning.  A disconnected
// graph yields the empty set (callers that require connectivity check first).
SpanningTreeSet spanning_trees(const Graph& g);

}  // namespace kirchcert
