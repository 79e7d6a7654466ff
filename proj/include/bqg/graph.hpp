#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bqg {

// Finite simple connected graph. Edges are stored as index pairs with
// tail < head; the adjacency lists are built once at construction.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
          std::vector<std::string> labels = {});

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

    // Index of the undirected edge {u,v}, or -1 if absent.
    int edge_index(int u, int v) const;

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adjacency_;
};

enum class VertexClass { R, B };

struct BipartitePartition {
    std::vector<VertexClass> class_of;  // indexed by vertex

    bool is_r(int v) const { return class_of[v] == VertexClass::R; }
};

struct BiregularProfile {
    int d_r = 0;  // degree of every R vertex
    int d_b = 0;  // degree of every B vertex

    int delta_r() const { return d_r - 1; }
    int delta_b() const { return d_b - 1; }
};

// Directed version of edge `underlying`, running tail -> head.
struct DirectedEdge {
    int tail = 0;
    int head = 0;
    int underlying = 0;
};

inline DirectedEdge reverse(const DirectedEdge& d) {
    return DirectedEdge{d.head, d.tail, d.underlying};
}

// Reads a graph from a JSON file: {"vertices": [...], "edges": [[i,j], ...]}.
// The "vertices" array of labels is optional; indices are 0-based.
Graph load_graph(const std::string& path);
Graph graph_from_json_text(const std::string& text);
std::string graph_to_json(const Graph& g);

// Two-colors a connected graph, vertex 0 mapped to class R.
// Throws std::runtime_error("odd cycle found ...") if no 2-coloring exists.
BipartitePartition bipartite_partition(const Graph& g);

// Degree pair (d_R, d_B); throws "not biregular" naming an offending vertex.
BiregularProfile biregular_profile(const Graph& g, const BipartitePartition& part);

// Replaces each edge by a path of length 2 through a fresh vertex.
// Midpoint of edge e gets index N_V + e.
Graph subdivide_edges(const Graph& g);

// Two copies of the vertex set, edges {v, w'} for each edge {v,w} of g.
// Throws "cover disconnected" when g is bipartite.
Graph bipartite_double_cover(const Graph& g);

// N_E - N_V + 1 for a connected graph.
int cycle_rank(const Graph& g);

// K(m_B, m_R): vertices 0..m_R-1 form the R class, the rest the B class.
Graph complete_bipartite(int m_b, int m_r);

// Directed edges 2e (tail<head) and 2e+1 (head<tail) for each edge e.
std::vector<DirectedEdge> directed_edges(const Graph& g);

}  // namespace bqg
