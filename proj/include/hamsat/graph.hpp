#ifndef HAMSAT_GRAPH_HPP
#define HAMSAT_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamsat/bits.hpp"

namespace hamsat {

// Undirected edge with endpoints stored as u < v. The edge index doubles as
// the subscript of its Boolean variable in the encoding.
struct Edge {
    int index = 0;
    int u = 0;
    int v = 0;
    std::string label;
};

struct IncidentEdge {
    int neighbor = 0;
    int edge = 0;
};

// Simple undirected graph: no loops, no multi-edges. Vertices are dense
// indices 0..n-1; user-facing labels are kept for display only. Immutable
// after construction, so safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Builds and validates a graph from endpoint pairs. Missing labels are
    // auto-assigned: vertex i -> "i+1", edge i -> "e<i>". Throws
    // ValidationError on loops, duplicate edges, duplicate edge labels, or
    // out-of-range endpoints.
    static Graph from_edges(int vertex_count, std::span<const std::pair<int, int>> endpoints,
                            std::vector<std::string> edge_labels = {},
                            std::vector<std::string> vertex_labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    std::span<const IncidentEdge> neighbors(int v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const {
        return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
    }

    const std::string& vertex_label(int v) const {
        return vertex_labels_[static_cast<std::size_t>(v)];
    }
    const std::string& edge_label(int e) const { return edges_[static_cast<std::size_t>(e)].label; }

    // Edge between u and v, if present.
    std::optional<int> find_edge(int u, int v) const;

    // Vertices violating the minimum-degree-2 assumption. A non-empty result
    // is a warning, not an error: the encoder turns it into a constant-false
    // block, so the formula correctly comes out unsatisfiable.
    std::vector<int> check_min_degree() const;

    // Edge-list text that parses back to this graph (same edge order, same
    // labels).
    std::string to_edge_list() const;

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<IncidentEdge>> adjacency_;
    std::vector<std::string> vertex_labels_;
};

// Parses the line-oriented edge-list format: each non-empty line that does
// not start with '#' is either `LABEL U V` or `U V` (edge labels then
// auto-assigned e0, e1, ...). Vertex tokens are arbitrary identifiers,
// mapped to dense indices in first-appearance order.
Graph parse_edge_list(std::string_view text);

std::vector<std::string> edge_labels(const Graph& g);
std::vector<std::string> vertex_labels(const Graph& g);

}  // namespace hamsat

#endif  // HAMSAT_GRAPH_HPP
