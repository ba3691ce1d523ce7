#include "hamsat/encoder.hpp"

#include <algorithm>

#include "hamsat/errors.hpp"

namespace hamsat {

std::string AssumptionWarning::describe(const Graph& g) const {
    if (kind == Kind::low_degree) {
        return "vertex '" + g.vertex_label(vertex) + "' has degree " +
               std::to_string(g.degree(vertex)) + " < 2; the encoding is unsatisfiable";
    }
    std::string members;
    for (int v : bit_indices(vertex_set)) {
        if (!members.empty()) members += ", ";
        members += g.vertex_label(v);
    }
    return "cycle vertex set {" + members +
           "} has no crossing edge pair; the encoding is unsatisfiable";
}

namespace {

void check_encodable(const Graph& g) {
    if (g.vertex_count() > kMaxWordBits || g.edge_count() > kMaxWordBits) {
        throw TooLargeError("encoder supports at most 64 vertices and 64 edges");
    }
}

}  // namespace

Block vertex_block(const Graph& g, int v) {
    Block block;
    block.provenance = Provenance::for_vertex(v);

    std::vector<int> incident;
    incident.reserve(static_cast<std::size_t>(g.degree(v)));
    for (const IncidentEdge& ie : g.neighbors(v)) incident.push_back(ie.edge);
    std::sort(incident.begin(), incident.end());

    EdgeSet all = 0;
    for (int e : incident) all |= bit(e);

    // One cube per unordered pair of incident edges, in pair-lexicographic
    // order; deg(v) < 2 leaves the block empty (constant false).
    for (std::size_t i = 0; i < incident.size(); ++i) {
        for (std::size_t j = i + 1; j < incident.size(); ++j) {
            const EdgeSet chosen = bit(incident[i]) | bit(incident[j]);
            block.cubes.push_back(Cube{chosen, all & ~chosen});
        }
    }
    return block;
}

Formula build_f1(const Graph& g) {
    check_encodable(g);
    Formula f;
    f.m = g.edge_count();
    f.blocks.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        f.blocks.push_back(vertex_block(g, v));
    }
    return f;
}

Block cycle_block(const Graph& g, VertexSet s) {
    Block block;
    block.provenance = Provenance::for_cycle_set(s);
    for (const BoundaryPair& p : crossing_pairs(g, s)) {
        block.cubes.push_back(Cube{bit(p.e1) | bit(p.e2), 0});
    }
    return block;
}

Formula build_f2(const Graph& g, std::span<const Cycle> cycles) {
    check_encodable(g);
    Formula f;
    f.m = g.edge_count();
    for (VertexSet s : distinct_cycle_vertex_sets(cycles, /*non_spanning_only=*/true)) {
        f.blocks.push_back(cycle_block(g, s));
    }
    return f;
}

EncodingReport build_full(const Graph& g, std::uint64_t max_cycles) {
    check_encodable(g);
    EncodingReport report;

    Formula f1 = build_f1(g);
    const std::vector<Cycle> cycles = enumerate_simple_cycles(g, max_cycles);
    Formula f2 = build_f2(g, cycles);

    report.f1_block_count = static_cast<int>(f1.blocks.size());
    report.f2_block_count = static_cast<int>(f2.blocks.size());

    report.formula.m = g.edge_count();
    report.formula.blocks = std::move(f1.blocks);
    report.formula.blocks.insert(report.formula.blocks.end(),
                                 std::make_move_iterator(f2.blocks.begin()),
                                 std::make_move_iterator(f2.blocks.end()));

    for (const Block& b : report.formula.blocks) {
        report.cube_count_total += b.cubes.size();
        if (!b.constant_false()) continue;
        if (b.provenance.kind == Provenance::Kind::vertex) {
            report.warnings.push_back(AssumptionWarning{AssumptionWarning::Kind::low_degree,
                                                        b.provenance.vertex, 0});
        } else {
            report.warnings.push_back(AssumptionWarning{AssumptionWarning::Kind::no_crossing_pair,
                                                        -1, b.provenance.vertex_set});
        }
    }
    return report;
}

}  // namespace hamsat
