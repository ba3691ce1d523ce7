#ifndef HAMSAT_ORACLE_HPP
#define HAMSAT_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "hamsat/bits.hpp"
#include "hamsat/graph.hpp"

namespace hamsat {

// Brute-force ground truth, kept deliberately independent of the encoder and
// solver: this module depends on the graph module only.

struct HamiltonianCycleSet {
    // Canonical vertex sequences: start at vertex 0, second element smaller
    // than the last, lexicographically sorted.
    std::vector<std::vector<int>> cycles;

    std::size_t count() const { return cycles.size(); }
};

// All Hamiltonian cycles by backtracking, deduplicated across rotation and
// direction. Throws TooLargeError above max_vertices.
HamiltonianCycleSet find_hamiltonian_cycles(const Graph& g, int max_vertices = 14);

// A spanning subgraph with every degree exactly 2, reported as an edge set
// plus its decomposition into canonical cycles.
struct TwoFactor {
    EdgeSet edges = 0;
    std::vector<std::vector<int>> cycles;
};

// All 2-factors by direct search over edge subsets. Throws TooLargeError
// above max_edges.
std::vector<TwoFactor> enumerate_2factors(const Graph& g, int max_edges = 24);

// Test-corpus generators. All randomness comes from the seed; a fixed seed
// reproduces the same graph byte for byte.
Graph random_graph(int n, double edge_probability, std::uint64_t seed);
Graph complete_graph(int n);

// Two hub vertices joined by three internally disjoint paths with the given
// internal vertex counts (each >= 1).
Graph theta_graph(int path1, int path2, int path3);

// Random simple regular graph via the pairing model with rejection. Requires
// n * degree even and degree < n.
Graph random_regular_graph(int n, int degree, std::uint64_t seed);

}  // namespace hamsat

#endif  // HAMSAT_ORACLE_HPP
