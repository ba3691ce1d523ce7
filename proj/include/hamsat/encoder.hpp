#ifndef HAMSAT_ENCODER_HPP
#define HAMSAT_ENCODER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hamsat/cycles.hpp"
#include "hamsat/formula.hpp"
#include "hamsat/graph.hpp"

namespace hamsat {

// Structural-assumption violation. Each one corresponds to a constant-false
// block in the formula: such graphs cannot be Hamiltonian and the encoding
// makes that explicit instead of failing.
struct AssumptionWarning {
    enum class Kind { low_degree, no_crossing_pair };
    Kind kind = Kind::low_degree;
    int vertex = -1;        // for low_degree
    VertexSet vertex_set = 0;  // for no_crossing_pair

    std::string describe(const Graph& g) const;
};

struct EncodingReport {
    Formula formula;
    int f1_block_count = 0;
    int f2_block_count = 0;
    std::size_t cube_count_total = 0;
    std::vector<AssumptionWarning> warnings;
};

// Degree constraint of one vertex: C(deg(v), 2) cubes, one per unordered pair
// of incident edges; each cube carries all deg(v) incident-edge literals with
// exactly the chosen pair positive. Constant false for deg(v) < 2.
Block vertex_block(const Graph& g, int v);

// F1: the vertex blocks in vertex order. Its models are exactly the edge
// subsets in which every vertex has two chosen incident edges.
Formula build_f1(const Graph& g);

// Crossing constraint of one cycle vertex set: one two-literal positive cube
// per element of R(S). Constant false when R(S) is empty.
Block cycle_block(const Graph& g, VertexSet s);

// F2: one block per distinct non-spanning cycle vertex set, in (size, bit
// pattern) order. Spanning cycles contribute no block.
Formula build_f2(const Graph& g, std::span<const Cycle> cycles);

// The full encoding F = F1 and F2, plus block/cube counts and assumption
// warnings.
EncodingReport build_full(const Graph& g, std::uint64_t max_cycles = 1'000'000);

}  // namespace hamsat

#endif  // HAMSAT_ENCODER_HPP
