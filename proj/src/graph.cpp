#include "hamsat/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "hamsat/errors.hpp"

namespace hamsat {

namespace {

std::uint64_t pack_pair(int u, int v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Graph Graph::from_edges(int vertex_count, std::span<const std::pair<int, int>> endpoints,
                        std::vector<std::string> edge_labels,
                        std::vector<std::string> vertex_labels) {
    if (vertex_count < 0) {
        throw ValidationError("vertex count must be non-negative");
    }
    Graph g;
    g.n_ = vertex_count;
    g.adjacency_.resize(static_cast<std::size_t>(vertex_count));

    if (vertex_labels.empty()) {
        vertex_labels.reserve(static_cast<std::size_t>(vertex_count));
        for (int v = 0; v < vertex_count; ++v) {
            vertex_labels.push_back(std::to_string(v + 1));
        }
    } else if (static_cast<int>(vertex_labels.size()) != vertex_count) {
        throw ValidationError("vertex label count does not match vertex count");
    }
    g.vertex_labels_ = std::move(vertex_labels);

    if (!edge_labels.empty() && edge_labels.size() != endpoints.size()) {
        throw ValidationError("edge label count does not match edge count");
    }

    std::unordered_set<std::uint64_t> seen_pairs;
    std::unordered_set<std::string> seen_labels;
    g.edges_.reserve(endpoints.size());
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
        auto [u, v] = endpoints[i];
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
            throw ValidationError("edge " + std::to_string(i) + " references vertex out of range");
        }
        if (u == v) {
            throw ValidationError("loop at vertex '" + g.vertex_labels_[static_cast<std::size_t>(u)] +
                                  "' (edge " + std::to_string(i) + ")");
        }
        if (u > v) std::swap(u, v);
        if (!seen_pairs.insert(pack_pair(u, v)).second) {
            throw ValidationError("duplicate edge between '" +
                                  g.vertex_labels_[static_cast<std::size_t>(u)] + "' and '" +
                                  g.vertex_labels_[static_cast<std::size_t>(v)] + "'");
        }
        std::string label = edge_labels.empty() ? "e" + std::to_string(i) : edge_labels[i];
        if (!seen_labels.insert(label).second) {
            throw ValidationError("duplicate edge label '" + label + "'");
        }
        const int index = static_cast<int>(i);
        g.edges_.push_back(Edge{index, u, v, std::move(label)});
        g.adjacency_[static_cast<std::size_t>(u)].push_back(IncidentEdge{v, index});
        g.adjacency_[static_cast<std::size_t>(v)].push_back(IncidentEdge{u, index});
    }
    return g;
}

std::optional<int> Graph::find_edge(int u, int v) const {
    if (u == v) return std::nullopt;
    const auto& adj = adjacency_[static_cast<std::size_t>(u)];
    for (const IncidentEdge& ie : adj) {
        if (ie.neighbor == v) return ie.edge;
    }
    return std::nullopt;
}

std::vector<int> Graph::check_min_degree() const {
    std::vector<int> violating;
    for (int v = 0; v < n_; ++v) {
        if (degree(v) < 2) violating.push_back(v);
    }
    return violating;
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    for (const Edge& e : edges_) {
        out << e.label << ' ' << vertex_labels_[static_cast<std::size_t>(e.u)] << ' '
            << vertex_labels_[static_cast<std::size_t>(e.v)] << '\n';
    }
    return out.str();
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_ || vertex_labels_ != other.vertex_labels_ ||
        edges_.size() != other.edges_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& a = edges_[i];
        const Edge& b = other.edges_[i];
        if (a.u != b.u || a.v != b.v || a.label != b.label) return false;
    }
    return true;
}

Graph parse_edge_list(std::string_view text) {
    struct RawEdge {
        std::string label;  // empty -> auto
        std::string u;
        std::string v;
    };
    std::vector<RawEdge> raw;

    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        std::vector<std::string> tokens;
        std::istringstream stream{std::string(line)};
        std::string token;
        while (stream >> token) tokens.push_back(token);
        if (tokens.empty() || tokens.front().starts_with('#')) continue;

        if (tokens.size() == 2) {
            raw.push_back(RawEdge{"", tokens[0], tokens[1]});
        } else if (tokens.size() == 3) {
            raw.push_back(RawEdge{tokens[0], tokens[1], tokens[2]});
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": expected 2 or 3 tokens, got " +
                             std::to_string(tokens.size()));
        }
    }

    // Vertex tokens -> dense indices in first-appearance order.
    std::unordered_map<std::string, int> vertex_index;
    std::vector<std::string> vertex_names;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = vertex_index.try_emplace(name, static_cast<int>(vertex_names.size()));
        if (inserted) vertex_names.push_back(name);
        return it->second;
    };

    std::vector<std::pair<int, int>> endpoints;
    std::vector<std::string> labels;
    endpoints.reserve(raw.size());
    labels.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        endpoints.emplace_back(intern(raw[i].u), intern(raw[i].v));
        labels.push_back(raw[i].label.empty() ? "e" + std::to_string(i) : raw[i].label);
    }
    return Graph::from_edges(static_cast<int>(vertex_names.size()), endpoints, std::move(labels),
                             std::move(vertex_names));
}

std::vector<std::string> edge_labels(const Graph& g) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) out.push_back(e.label);
    return out;
}

std::vector<std::string> vertex_labels(const Graph& g) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) out.push_back(g.vertex_label(v));
    return out;
}

}  // namespace hamsat
