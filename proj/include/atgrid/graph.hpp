#pragma once

#include <string>
#include <utility>
#include <vector>

namespace atgrid {

using Edge = std::pair<int, int>;

/**
 * Undirected simple graph with 0-based vertices and a canonical edge order:
 * every stored edge has i < j and the edge list is sorted lexicographically.
 * That order is load-bearing: the sign conventions of the graph polynomial
 * and of orientation parity are all derived from it. Graphs are immutable
 * after construction.
 */
class Graph {
  public:
    Graph() = default;

    // Validates simplicity (no loops, no duplicates, endpoints < n) and
    // canonicalizes: endpoints swapped to i < j, list sorted.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::vector<int> degrees() const;
    bool is_regular(int d) const;
    bool has_edge(int u, int v) const;

    // Neighbor lists (built once, shared by the search engines).
    const std::vector<std::vector<int>>& adjacency() const noexcept { return adj_; }

    friend bool operator==(const Graph& x, const Graph& y) noexcept {
        return x.n_ == y.n_ && x.edges_ == y.edges_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int left, int right);

// Vertex (u, v) of g [] h is indexed v * |V(g)| + u: layers are copies of g,
// the layer index v runs along h. All engines share this one numbering.
Graph cartesian_product(const Graph& g, const Graph& h);

struct TorusSpec {
    int rows = 0;  // layer cycle length m
    int cols = 0;  // outer cycle length k
};

// C_rows [] C_cols; requires rows, cols >= 3.
Graph make_torus(const TorusSpec& spec);

/**
 * An arc-direction assignment on a graph: per edge, which endpoint is the
 * head. Arc e points tail(e) -> head(e).
 */
class Orientation {
  public:
    // heads[e] must be one of the two endpoints of edge e.
    Orientation(Graph graph, std::vector<int> heads);

    // Builds graph + heads from (tail, head) arc pairs; arcs may arrive in
    // any order, the underlying edges are canonicalized.
    static Orientation from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    const Graph& graph() const noexcept { return graph_; }
    int head(int e) const { return heads_[static_cast<std::size_t>(e)]; }
    int tail(int e) const {
        const Edge& ed = graph_.edges()[static_cast<std::size_t>(e)];
        return heads_[static_cast<std::size_t>(e)] == ed.first ? ed.second : ed.first;
    }

    std::vector<int> indegrees() const;
    int max_indegree() const;

  private:
    Graph graph_;
    std::vector<int> heads_;
};

// Edge-list text format: header "n m", then m lines "u v".
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

// Orientation text format: header "n m", then m lines "tail head".
Orientation parse_orientation(const std::string& text);
std::string serialize_orientation(const Orientation& d);

}  // namespace atgrid
