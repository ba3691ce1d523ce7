#ifndef HAMSAT_FORMULA_HPP
#define HAMSAT_FORMULA_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamsat/bits.hpp"

namespace hamsat {

struct Literal {
    int edge = 0;
    bool positive = true;
};

// Conjunction of non-contrary literals over edge variables, stored as two
// m-bit masks. Absorption and evaluation are a couple of word ops each.
struct Cube {
    EdgeSet pos = 0;
    EdgeSet neg = 0;

    bool contradictory() const { return (pos & neg) != 0; }
    bool empty() const { return pos == 0 && neg == 0; }  // constant true
    int size() const { return popcount(pos | neg); }

    // True when this cube's literal set is a subset of o's, i.e. this cube
    // absorbs o.
    bool subsumes(const Cube& o) const { return (pos & ~o.pos) == 0 && (neg & ~o.neg) == 0; }

    bool matches(std::uint64_t bits) const { return (bits & pos) == pos && (bits & neg) == 0; }

    friend auto operator<=>(const Cube&, const Cube&) = default;
};

// Where a block came from: the degree constraint of one vertex, or the
// crossing constraint of one cycle vertex set.
struct Provenance {
    enum class Kind { vertex, cycle_set };
    Kind kind = Kind::vertex;
    int vertex = -1;
    VertexSet vertex_set = 0;

    static Provenance for_vertex(int v) { return Provenance{Kind::vertex, v, 0}; }
    static Provenance for_cycle_set(VertexSet s) { return Provenance{Kind::cycle_set, -1, s}; }
};

// Disjunction of cubes. An empty cube list is the constant-false block (a
// vacuous disjunction), which is how assumption violations surface in the
// formula.
struct Block {
    std::vector<Cube> cubes;
    Provenance provenance;

    bool constant_false() const { return cubes.empty(); }
};

// Conjunction of blocks over m edge variables.
struct Formula {
    int m = 0;
    std::vector<Block> blocks;
};

// Total truth assignment to the m edge variables.
struct Assignment {
    std::uint64_t bits = 0;
    int width = 0;

    bool test(int edge) const { return has_bit(bits, edge); }
    friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

// CNF over the m edge variables (CNF vars 1..m, in edge order) followed by
// one auxiliary variable per cube. Clauses use DIMACS conventions: positive
// integer k means variable k true, negative means false.
struct CnfInstance {
    int num_vars = 0;
    int num_edge_vars = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<std::string> edge_labels;

    int edge_var(int edge) const { return edge + 1; }
    // -1 when the variable is auxiliary.
    int var_edge(int var) const { return var >= 1 && var <= num_edge_vars ? var - 1 : -1; }
};

// True iff every block has at least one cube whose literals all hold under a.
// Throws WidthMismatchError when a.width != f.m.
bool evaluate(const Formula& f, Assignment a);

// Multiplies the blocks out into a disjunction of cubes, dropping
// contradictory cubes and absorbing supersets after every block. The result
// is canonically sorted and has the same satisfying set as f. Throws
// ExpansionOverflowError when an intermediate cube count exceeds max_cubes.
std::vector<Cube> expand_to_dnf(const Formula& f, std::uint64_t max_cubes = 1'000'000);

// Equisatisfiable CNF with one auxiliary variable per cube (aux <-> cube) and
// one clause per block over its aux vars. Projecting any CNF model onto the
// edge variables satisfies f, and every model of f extends to a CNF model.
CnfInstance tseitin_cnf(const Formula& f, std::span<const std::string> edge_labels = {});

// Standard DIMACS CNF text; byte-exact and deterministic.
std::string write_dimacs(const CnfInstance& cnf);

// Parses solver output (`v` lines or raw signed integers) and projects onto
// the edge variables. All edge variables must be mentioned.
Assignment parse_dimacs_model(std::string_view text, const CnfInstance& cnf);

// Literals of a cube in ascending edge order.
std::vector<Literal> cube_literals(const Cube& c, int m);

std::string format_cube(const Cube& c, std::span<const std::string> labels);
std::string format_block(const Block& b, std::span<const std::string> labels);
std::string format_formula(const Formula& f, std::span<const std::string> labels);
std::string format_dnf(std::span<const Cube> cubes, std::span<const std::string> labels);

}  // namespace hamsat

#endif  // HAMSAT_FORMULA_HPP
