#include "hamsat/cycles.hpp"

#include <algorithm>
#include <string>

#include "hamsat/errors.hpp"

namespace hamsat {

namespace {

struct CycleSearch {
    const Graph& g;
    std::uint64_t max_cycles;
    std::vector<Cycle>& out;

    int root = 0;
    std::vector<int> path;
    VertexSet on_path = 0;

    // Sorted adjacency makes the search order (and hence everything
    // downstream) deterministic regardless of input edge order.
    std::vector<std::vector<IncidentEdge>> sorted_adj;

    CycleSearch(const Graph& graph, std::uint64_t cap, std::vector<Cycle>& sink)
        : g(graph), max_cycles(cap), out(sink) {
        sorted_adj.resize(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto adj = g.neighbors(v);
            sorted_adj[static_cast<std::size_t>(v)].assign(adj.begin(), adj.end());
            std::sort(sorted_adj[static_cast<std::size_t>(v)].begin(),
                      sorted_adj[static_cast<std::size_t>(v)].end(),
                      [](const IncidentEdge& a, const IncidentEdge& b) {
                          return a.neighbor < b.neighbor;
                      });
        }
    }

    void record(int closing_edge) {
        if (out.size() >= max_cycles) {
            throw CycleOverflowError(
                "cycle count exceeds max_cycles = " + std::to_string(max_cycles), max_cycles);
        }
        Cycle c;
        c.vertices = path;
        c.vertex_set = on_path;
        c.edge_indices.reserve(path.size());
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            c.edge_indices.push_back(*g.find_edge(path[i], path[i + 1]));
        }
        c.edge_indices.push_back(closing_edge);
        c.spanning = static_cast<int>(path.size()) == g.vertex_count();
        out.push_back(std::move(c));
    }

    void dfs(int v) {
        for (const IncidentEdge& ie : sorted_adj[static_cast<std::size_t>(v)]) {
            const int w = ie.neighbor;
            if (w == root) {
                // Close a cycle. Each one is met in both directions; keeping
                // path[1] < path.back() leaves the canonical representation.
                if (path.size() >= 3 && path[1] < path.back()) record(ie.edge);
            } else if (w > root && !has_bit(on_path, w)) {
                path.push_back(w);
                on_path |= bit(w);
                dfs(w);
                path.pop_back();
                on_path &= ~bit(w);
            }
        }
    }

    void run() {
        for (root = 0; root < g.vertex_count(); ++root) {
            path.assign(1, root);
            on_path = bit(root);
            dfs(root);
        }
    }
};

}  // namespace

std::vector<Cycle> enumerate_simple_cycles(const Graph& g, std::uint64_t max_cycles) {
    if (g.vertex_count() > kMaxWordBits || g.edge_count() > kMaxWordBits) {
        throw TooLargeError("cycle enumeration supports at most 64 vertices and 64 edges");
    }
    std::vector<Cycle> cycles;
    CycleSearch search(g, max_cycles, cycles);
    search.run();
    std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
    return cycles;
}

EdgeSet boundary_edges(const Graph& g, VertexSet s) {
    EdgeSet out = 0;
    for (const Edge& e : g.edges()) {
        if (has_bit(s, e.u) != has_bit(s, e.v)) out |= bit(e.index);
    }
    return out;
}

std::vector<BoundaryPair> crossing_pairs(const Graph& g, VertexSet s) {
    const std::vector<int> boundary = bit_indices(boundary_edges(g, s));
    std::vector<BoundaryPair> pairs;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        const Edge& ei = g.edge(boundary[i]);
        const int inside_i = has_bit(s, ei.u) ? ei.u : ei.v;
        for (std::size_t j = i + 1; j < boundary.size(); ++j) {
            const Edge& ej = g.edge(boundary[j]);
            const int inside_j = has_bit(s, ej.u) ? ej.u : ej.v;
            if (inside_i != inside_j) {
                pairs.push_back(BoundaryPair{boundary[i], boundary[j], inside_i, inside_j});
            }
        }
    }
    return pairs;
}

std::vector<VertexSet> distinct_cycle_vertex_sets(std::span<const Cycle> cycles,
                                                  bool non_spanning_only) {
    std::vector<VertexSet> sets;
    sets.reserve(cycles.size());
    for (const Cycle& c : cycles) {
        if (non_spanning_only && c.spanning) continue;
        sets.push_back(c.vertex_set);
    }
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        const int pa = popcount(a);
        const int pb = popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

}  // namespace hamsat
