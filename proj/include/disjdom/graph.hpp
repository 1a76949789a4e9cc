#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "disjdom/bitset.hpp"

namespace disjdom {

// Simple undirected graph on dense 0-based labels with per-vertex adjacency
// bitsets and a distance-2 neighborhood cache. Immutable after construction;
// mutating operations build new graphs.
class Graph {
public:
    Graph() : n_(0) {}

    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;
    std::vector<int> degree_sequence() const;  // sorted ascending

    const Bitset& neighbors(int v) const;
    Bitset closed_neighborhood(int v) const;

    // Vertices at graph distance exactly 2 from v.
    const Bitset& distance2(int v) const;

    std::vector<std::pair<int, int>> edges() const;

    Bitset vertex_set() const;  // all vertices

    // New graph with edge uv added / removed.
    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    // New graph with the listed vertices removed. Remaining vertices are
    // relabeled order-preservingly: new(v) = v - |{r in removed : r < v}|.
    Graph remove_vertices(const std::vector<int>& removed) const;

    // New graph on n+extra vertices; existing labels and edges unchanged.
    Graph add_vertices(int extra) const;

    // Relabel: vertex v becomes perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    // Edge uv replaced by path u, x1, ..., xk, v with the new vertices
    // appended after the existing labels. Requires uv in E, k >= 1.
    Graph subdivide_edge(int u, int v, int k) const;

    bool is_connected() const;
    // Component id per vertex, ids in first-seen order; returns count.
    int components(std::vector<int>& comp) const;
    std::vector<Graph> component_graphs() const;
    // Induced subgraph on the given vertices (order-preserving relabel).
    Graph induced(const Bitset& verts) const;

    bool operator==(const Graph& o) const;  // identical labeled adjacency

private:
    void check_vertex(int v) const;
    void finish();  // computes degrees and distance-2 cache

    int n_;
    std::vector<Bitset> adj_;
    std::vector<Bitset> dist2_;
    std::vector<int> deg_;
};

// Incremental construction; build() freezes and computes caches.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int order() const { return n_; }
    Graph build() const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Bitset> seen_;
};

// --- graph6 interchange format -------------------------------------------

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), byte_offset(offset) {}
    std::size_t byte_offset;
};

// Decodes one graph6 line (optional ">>graph6<<" prefix tolerated).
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// --- edge-list text format: "n m" header then one "u v" line per edge -----

Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// --- small named constructors used across modules -------------------------

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace disjdom
