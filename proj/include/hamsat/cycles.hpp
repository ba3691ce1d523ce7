#ifndef HAMSAT_CYCLES_HPP
#define HAMSAT_CYCLES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hamsat/bits.hpp"
#include "hamsat/graph.hpp"

namespace hamsat {

// A simple cycle in canonical form: the vertex sequence starts at the cycle's
// minimum vertex index and proceeds in the direction whose second element is
// the smaller of the start's two cycle neighbors. Each undirected cycle has
// exactly one such representation.
struct Cycle {
    std::vector<int> vertices;
    VertexSet vertex_set = 0;
    std::vector<int> edge_indices;  // edge_indices[i] joins vertices[i] and vertices[(i+1) % k]
    bool spanning = false;
};

// One element of R(S): two boundary edges of S whose endpoints inside S
// differ.
struct BoundaryPair {
    int e1 = 0;
    int e2 = 0;  // e1 < e2
    int a1 = 0;  // endpoint of e1 inside S
    int a2 = 0;  // endpoint of e2 inside S
};

// All simple cycles of g, each exactly once, sorted by (|S|, canonical vertex
// sequence). Throws CycleOverflowError as soon as the count exceeds
// max_cycles, and TooLargeError for graphs beyond one-word sets.
std::vector<Cycle> enumerate_simple_cycles(const Graph& g, std::uint64_t max_cycles = 1'000'000);

// E(S): edges with exactly one endpoint in S.
EdgeSet boundary_edges(const Graph& g, VertexSet s);

// R(S): unordered pairs of boundary edges with distinct inside-S endpoints,
// in (e1, e2) lexicographic order.
std::vector<BoundaryPair> crossing_pairs(const Graph& g, VertexSet s);

// Unique cycle vertex sets, sorted by (size, bit pattern); spanning sets
// excluded when the flag is set.
std::vector<VertexSet> distinct_cycle_vertex_sets(std::span<const Cycle> cycles,
                                                  bool non_spanning_only);

}  // namespace hamsat

#endif  // HAMSAT_CYCLES_HPP
