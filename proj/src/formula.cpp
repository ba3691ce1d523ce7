#include "hamsat/formula.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "hamsat/errors.hpp"

namespace hamsat {

bool evaluate(const Formula& f, Assignment a) {
    if (a.width != f.m) {
        throw WidthMismatchError("assignment width " + std::to_string(a.width) +
                                 " does not match formula variable count " + std::to_string(f.m));
    }
    for (const Block& b : f.blocks) {
        bool any = false;
        for (const Cube& c : b.cubes) {
            if (c.matches(a.bits)) {
                any = true;
                break;
            }
        }
        if (!any) return false;
    }
    return true;
}

namespace {

// Keeps only cubes not absorbed by another (X | XY = X) and drops
// duplicates. Sorting by literal count first means a kept cube can never be
// absorbed by a later one.
void absorb(std::vector<Cube>& cubes) {
    std::sort(cubes.begin(), cubes.end(), [](const Cube& a, const Cube& b) {
        const int sa = a.size();
        const int sb = b.size();
        if (sa != sb) return sa < sb;
        return a < b;
    });
    std::vector<Cube> kept;
    kept.reserve(cubes.size());
    for (const Cube& c : cubes) {
        bool absorbed = false;
        for (const Cube& k : kept) {
            if (k.subsumes(c)) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) kept.push_back(c);
    }
    cubes = std::move(kept);
}

}  // namespace

std::vector<Cube> expand_to_dnf(const Formula& f, std::uint64_t max_cubes) {
    std::vector<Cube> acc{Cube{}};  // constant-true disjunction
    for (const Block& b : f.blocks) {
        std::vector<Cube> next;
        for (const Cube& lhs : acc) {
            for (const Cube& rhs : b.cubes) {
                Cube merged{lhs.pos | rhs.pos, lhs.neg | rhs.neg};
                if (merged.contradictory()) continue;
                next.push_back(merged);
                if (next.size() > max_cubes) {
                    throw ExpansionOverflowError(
                        "intermediate cube count exceeds max_cubes = " + std::to_string(max_cubes),
                        max_cubes);
                }
            }
        }
        absorb(next);
        acc = std::move(next);
        if (acc.empty()) break;  // constant false
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

CnfInstance tseitin_cnf(const Formula& f, std::span<const std::string> edge_labels) {
    CnfInstance cnf;
    cnf.num_edge_vars = f.m;
    cnf.edge_labels.reserve(static_cast<std::size_t>(f.m));
    for (int e = 0; e < f.m; ++e) {
        cnf.edge_labels.push_back(e < static_cast<int>(edge_labels.size())
                                      ? edge_labels[static_cast<std::size_t>(e)]
                                      : "e" + std::to_string(e));
    }

    int next_var = f.m;
    for (const Block& b : f.blocks) {
        if (b.constant_false()) {
            cnf.clauses.emplace_back();  // empty clause
            continue;
        }
        std::vector<int> block_clause;
        block_clause.reserve(b.cubes.size());
        for (const Cube& c : b.cubes) {
            const int aux = ++next_var;
            block_clause.push_back(aux);
            std::vector<int> cube_to_aux;
            for (const Literal& lit : cube_literals(c, f.m)) {
                const int var = lit.edge + 1;
                // aux -> literal
                cnf.clauses.push_back({-aux, lit.positive ? var : -var});
                cube_to_aux.push_back(lit.positive ? -var : var);
            }
            // cube -> aux
            cube_to_aux.push_back(aux);
            cnf.clauses.push_back(std::move(cube_to_aux));
        }
        cnf.clauses.push_back(std::move(block_clause));
    }
    cnf.num_vars = next_var;
    return cnf;
}

std::string write_dimacs(const CnfInstance& cnf) {
    std::ostringstream out;
    for (std::size_t e = 0; e < cnf.edge_labels.size(); ++e) {
        out << "c edge " << cnf.edge_labels[e] << " -> var " << (e + 1) << '\n';
    }
    out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
    for (const std::vector<int>& clause : cnf.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

Assignment parse_dimacs_model(std::string_view text, const CnfInstance& cnf) {
    std::vector<signed char> value(static_cast<std::size_t>(cnf.num_vars) + 1, 0);

    std::istringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
        std::istringstream tokens{line};
        std::string tok;
        bool first = true;
        while (tokens >> tok) {
            if (first && (tok == "c" || tok == "s" || tok == "SAT" || tok == "UNSAT" ||
                          tok == "SATISFIABLE" || tok == "UNSATISFIABLE")) {
                break;  // comment / status line
            }
            if (first && tok == "v") {
                first = false;
                continue;
            }
            first = false;
            long long lit = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw ModelParseError("malformed model token '" + tok + "'");
            }
            if (lit == 0) continue;  // clause/model terminator
            const long long var = lit < 0 ? -lit : lit;
            if (var > cnf.num_vars) {
                throw VarOutOfRangeError("model mentions variable " + std::to_string(var) +
                                         " but the instance has only " +
                                         std::to_string(cnf.num_vars) + " variables");
            }
            const signed char polarity = lit > 0 ? 1 : -1;
            signed char& slot = value[static_cast<std::size_t>(var)];
            if (slot != 0 && slot != polarity) {
                throw ModelParseError("model assigns variable " + std::to_string(var) +
                                      " both polarities");
            }
            slot = polarity;
        }
    }

    Assignment a{0, cnf.num_edge_vars};
    for (int e = 0; e < cnf.num_edge_vars; ++e) {
        const signed char v = value[static_cast<std::size_t>(e) + 1];
        if (v == 0) {
            throw ModelParseError("incomplete model: edge variable " + std::to_string(e + 1) +
                                  " (" + cnf.edge_labels[static_cast<std::size_t>(e)] +
                                  ") is unassigned");
        }
        if (v > 0) a.bits |= bit(e);
    }
    return a;
}

std::vector<Literal> cube_literals(const Cube& c, int m) {
    std::vector<Literal> lits;
    lits.reserve(static_cast<std::size_t>(c.size()));
    for (int e = 0; e < m; ++e) {
        if (has_bit(c.pos, e)) {
            lits.push_back(Literal{e, true});
        } else if (has_bit(c.neg, e)) {
            lits.push_back(Literal{e, false});
        }
    }
    return lits;
}

namespace {

std::string label_for(int edge, std::span<const std::string> labels) {
    return edge < static_cast<int>(labels.size()) ? labels[static_cast<std::size_t>(edge)]
                                                  : "e" + std::to_string(edge);
}

void append_cube(std::string& out, const Cube& c, std::span<const std::string> labels) {
    if (c.empty()) {
        out += "true";
        return;
    }
    bool first = true;
    for (int e = 0; e < kMaxWordBits; ++e) {
        const bool p = has_bit(c.pos, e);
        const bool n = has_bit(c.neg, e);
        if (!p && !n) continue;
        if (!first) out += " & ";
        if (n) out += '~';
        out += label_for(e, labels);
        first = false;
    }
}

}  // namespace

std::string format_cube(const Cube& c, std::span<const std::string> labels) {
    std::string out;
    append_cube(out, c, labels);
    return out;
}

std::string format_block(const Block& b, std::span<const std::string> labels) {
    std::string out = "(";
    if (b.constant_false()) {
        out += "false";
    } else {
        for (std::size_t i = 0; i < b.cubes.size(); ++i) {
            if (i != 0) out += " | ";
            append_cube(out, b.cubes[i], labels);
        }
    }
    out += ')';
    return out;
}

std::string format_formula(const Formula& f, std::span<const std::string> labels) {
    if (f.blocks.empty()) return "true";
    std::string out;
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        if (i != 0) out += " & ";
        out += format_block(f.blocks[i], labels);
    }
    return out;
}

std::string format_dnf(std::span<const Cube> cubes, std::span<const std::string> labels) {
    if (cubes.empty()) return "false";
    std::string out;
    for (std::size_t i = 0; i < cubes.size(); ++i) {
        if (i != 0) out += " | ";
        out += '(';
        append_cube(out, cubes[i], labels);
        out += ')';
    }
    return out;
}

}  // namespace hamsat
