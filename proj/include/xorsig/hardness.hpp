#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "xorsig/bitvec.hpp"
#include "xorsig/formula.hpp"

// Reduction from 3-SAT to the extension problem for maximal bipartite edge
// subgraphs, plus a small exact decider for that problem.
namespace xorsig::hardness {

// Ordinary CNF with DIMACS-style signed literals.
struct Cnf {
    std::size_t num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

Cnf parse_dimacs(std::istream& in);
Cnf parse_dimacs_string(std::string_view text);

bool cnf_satisfied(const Cnf& cnf, const Assignment& alpha);

using Vertex = std::size_t;
using EdgeId = std::size_t;  // 0-based position in SimpleGraph::edges

struct SimpleGraph {
    std::size_t num_vertices = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
};

struct ReductionInstance {
    SimpleGraph graph;
    IndexList must_have;   // A: edges x_i y_i
    IndexList must_avoid;  // B: edges u c_j
    std::size_t num_vars = 0;
    std::size_t num_clauses = 0;

    // Vertex layout: x_i = 2(i-1), y_i = 2(i-1)+1, c_j = 2n + j-1, u = 2n + m (i, j 1-based).
    Vertex x(std::size_t i) const { return 2 * (i - 1); }
    Vertex y(std::size_t i) const { return 2 * (i - 1) + 1; }
    Vertex c(std::size_t j) const { return 2 * num_vars + j - 1; }
    Vertex u() const { return 2 * num_vars + num_clauses; }

    // Index of edge {a, b}, if present.
    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
};

// Edges are created as: all x_i y_i, then per clause the literal edges in
// literal order, then u joined to every other vertex in label order.
ReductionInstance reduce_3sat(const Cnf& cnf);

inline constexpr std::size_t kDefaultColoringCap = 26;

// Some maximal bipartite edge subgraph H with must ⊆ H and avoid ∩ H = ∅, as
// an edge bit set. Only 2-colorings consistent with the two constraint sets
// are visited; throws EngineRefusal when that space is above 2^cap.
std::optional<BitVec> brute_extension(const SimpleGraph& g, const IndexList& must, const IndexList& avoid,
                                      std::size_t cap = kDefaultColoringCap);

bool is_bipartite(const SimpleGraph& g, const BitVec& edges);
// Bipartite, and adding any absent edge creates an odd cycle.
bool is_maximal_bipartite(const SimpleGraph& g, const BitVec& edges);

// Reads the 3-SAT model encoded by a witness: v_i is true iff u x_i is in H.
// Throws ContractViolation when H is not a valid witness for inst.
Assignment decode_witness(const ReductionInstance& inst, const BitVec& h);

// `edge <id> <u> <v> blue` lines (1-based ids), with A and B as comment lines.
void emit_edge_dump(std::ostream& out, const ReductionInstance& inst);

// The instance graph as a 2-XOR formula of disequalities, one per edge.
XorCnf as_disequalities(const SimpleGraph& g);

}  // namespace xorsig::hardness
