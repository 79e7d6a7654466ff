#include "bqg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bqg {

namespace {

void check_connected(int n, const std::vector<std::vector<int>>& adj,
                     const char* message) {
    if (n == 0) throw std::invalid_argument("graph has no vertices");
    std::vector<char> seen(n, 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push(w);
            }
        }
    }
    if (reached != n) throw std::runtime_error(message);
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
    if (vertex_count <= 0) throw std::invalid_argument("graph has no vertices");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count)
        throw std::invalid_argument("label count does not match vertex count");

    edges_.reserve(edges.size());
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            std::ostringstream msg;
            msg << "edge " << i << ": vertex index out of range";
            throw std::invalid_argument(msg.str());
        }
        if (u == v) {
            std::ostringstream msg;
            msg << "not simple: edge " << i << " is a loop at vertex " << u;
            throw std::invalid_argument(msg.str());
        }
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) {
            std::ostringstream msg;
            msg << "not simple: edge " << i << " duplicates {" << u << "," << v << "}";
            throw std::invalid_argument(msg.str());
        }
        edges_.emplace_back(u, v);
    }

    adjacency_.assign(vertex_count_, {});
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());

    check_connected(vertex_count_, adjacency_, "not connected");
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e] == std::make_pair(u, v)) return static_cast<int>(e);
    return -1;
}

Graph graph_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("graph JSON parse error: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
        throw std::invalid_argument("graph JSON must be an object with an \"edges\" array");

    std::vector<std::string> labels;
    int vertex_count = 0;
    if (doc.contains("vertices")) {
        if (!doc["vertices"].is_array())
            throw std::invalid_argument("\"vertices\" must be an array of labels");
        for (const auto& item : doc["vertices"]) labels.push_back(item.get<std::string>());
        vertex_count = static_cast<int>(labels.size());
    }

    std::vector<std::pair<int, int>> edges;
    int max_index = -1;
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
        const auto& pair = doc["edges"][i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer()) {
            std::ostringstream msg;
            msg << "edge " << i << ": expected a pair of vertex indices";
            throw std::invalid_argument(msg.str());
        }
        int u = pair[0].get<int>();
        int v = pair[1].get<int>();
        max_index = std::max({max_index, u, v});
        edges.emplace_back(u, v);
    }
    if (labels.empty()) vertex_count = max_index + 1;

    return Graph(vertex_count, std::move(edges), std::move(labels));
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return graph_from_json_text(buffer.str());
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json doc;
    if (!g.labels().empty()) doc["vertices"] = g.labels();
    auto& edges = doc["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return doc.dump();
}

BipartitePartition bipartite_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::queue<int> queue;
    color[0] = 0;  // vertex 0 is class R
    queue.push(0);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v)) {
            if (color[w] < 0) {
                color[w] = 1 - color[v];
                queue.push(w);
            } else if (color[w] == color[v]) {
                std::ostringstream msg;
                msg << "odd cycle found through vertices " << v << " and " << w;
                throw std::runtime_error(msg.str());
            }
        }
    }
    BipartitePartition part;
    part.class_of.resize(n);
    for (int v = 0; v < n; ++v)
        part.class_of[v] = color[v] == 0 ? VertexClass::R : VertexClass::B;
    return part;
}

BiregularProfile biregular_profile(const Graph& g, const BipartitePartition& part) {
    int d_r = -1;
    int d_b = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int& expected = part.is_r(v) ? d_r : d_b;
        if (expected < 0) {
            expected = g.degree(v);
        } else if (expected != g.degree(v)) {
            std::ostringstream msg;
            msg << "not biregular: vertex " << v << " has degree " << g.degree(v)
                << ", class requires " << expected;
            throw std::runtime_error(msg.str());
        }
    }
    if (d_r < 0 || d_b < 0) throw std::runtime_error("not biregular: empty vertex class");
    return BiregularProfile{d_r, d_b};
}

Graph subdivide_edges(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        edges.emplace_back(u, n + e);
        edges.emplace_back(v, n + e);
    }
    return Graph(n + g.edge_count(), std::move(edges));
}

Graph bipartite_double_cover(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, v + n);
        edges.emplace_back(v, u + n);
    }
    try {
        return Graph(2 * n, std::move(edges));
    } catch (const std::runtime_error&) {
        throw std::runtime_error("cover disconnected");
    }
}

int cycle_rank(const Graph& g) { return g.edge_count() - g.vertex_count() + 1; }

Graph complete_bipartite(int m_b, int m_r) {
    if (m_b < 1 || m_r < 1)
        throw std::invalid_argument("complete bipartite classes must be nonempty");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m_b) * m_r);
    for (int r = 0; r < m_r; ++r)
        for (int b = 0; b < m_b; ++b) edges.emplace_back(r, m_r + b);
    return Graph(m_r + m_b, std::move(edges));
}

std::vector<DirectedEdge> directed_edges(const Graph& g) {
    std::vector<DirectedEdge> out;
    out.reserve(2 * g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        out.push_back(DirectedEdge{u, v, e});
        out.push_back(DirectedEdge{v, u, e});
    }
    return out;
}

}  // namespace bqg
