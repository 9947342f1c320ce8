#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "xorsig/bitvec.hpp"
#include "xorsig/formula.hpp"
#include "xorsig/maxgen.hpp"

// Maximal signatures of 2-XOR formulas as maximal red-blue bipartite
// subgraphs of the formula's edge-bicolored multigraph, listed by proximity
// search.
namespace xorsig::rb {

using Vertex = std::size_t;
using EdgeId = std::size_t;  // 0-based
using EdgeSet = BitVec;      // indexed by EdgeId

enum class Color { Red, Blue };  // red: x = y, blue: x != y

struct Edge {
    Vertex a;
    Vertex b;
    Color color;
    ClauseIndex clause;  // 0-based index of the source clause

    Vertex other(Vertex v) const { return v == a ? b : a; }
};

// Vertex labels double as the tie-break order of every traversal.
class BicoloredMultigraph {
public:
    BicoloredMultigraph() = default;
    explicit BicoloredMultigraph(std::size_t num_vertices) : adj_(num_vertices) {}

    // At most one edge per (unordered pair, color); no loops.
    EdgeId add_edge(Vertex a, Vertex b, Color color, ClauseIndex clause);

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<EdgeId>& incident(Vertex v) const { return adj_[v]; }

    EdgeSet empty_set() const { return EdgeSet(edges_.size()); }
    EdgeSet full_set() const;

    // Set when unit clauses are present; the gadget is vertex 0.
    bool has_gadget = false;
    // Vertex of variable v (1-based).
    Vertex var_vertex(Var v) const { return (has_gadget ? 1 : 0) + v - 1; }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> adj_;
};

// One edge per clause, edge j for clause j. Requires clauses of width <= 2
// without duplicates; any unit clause attaches to the gadget vertex 0.
BicoloredMultigraph build_graph(const XorCnf& phi);

// Per-vertex side; within each connected component of the subgraph the
// smallest-label vertex is on side 0. Vertices outside the subgraph stay 0
// and are absent from `present`.
struct Bipartition {
    std::vector<bool> side;
    BitVec present;
};

// An odd-parity cycle: its blue-edge count is odd, so no bipartition fits.
struct RbConflict {
    std::vector<EdgeId> cycle;
};

using RbCheck = std::variant<Bipartition, RbConflict>;

RbCheck check_rb_bipartite(const BicoloredMultigraph& g, const EdgeSet& s);
// Same check, visiting each vertex's incident edges in the order they appear in `edge_order`.
RbCheck check_rb_bipartite(const BicoloredMultigraph& g, const std::vector<EdgeId>& edge_order);

bool is_rb_bipartite(const BicoloredMultigraph& g, const EdgeSet& s);
bool is_connected(const BicoloredMultigraph& g, const EdgeSet& s);

// Greedy completion in ascending edge order. Throws ContractViolation on a
// non-bipartite seed.
EdgeSet gc_rb(const BicoloredMultigraph& g, const EdgeSet& seed);

struct MuOrder {
    std::vector<Vertex> vertices;  // BFS order from the smallest label
    std::vector<EdgeId> edges;     // by later endpoint, then earlier endpoint, in BFS positions
};

// Edge ordering of a connected solution H; BFS over H visiting neighbors
// by ascending label.
MuOrder mu(const BicoloredMultigraph& g, const EdgeSet& h);

// The edge stars of the two endpoints of e (e itself included in both).
std::pair<EdgeSet, EdgeSet> removables(const BicoloredMultigraph& g, const EdgeSet& h, EdgeId e);

struct ProximityStats {
    std::size_t emitted = 0;
    std::size_t gc_calls = 0;
    std::size_t max_gc_between_outputs = 0;
};

using EdgeSetSink = std::function<bool(const EdgeSet&)>;

// Proximity search over the maximal red-blue bipartite subgraphs of a
// connected multigraph. Depth-first; a solution is reported when it is taken
// off the stack, so at most 2 * |E| completions separate two outputs.
ProximityStats enumerate_max_rb(const BicoloredMultigraph& g, const EdgeSetSink& sink);

// Splits the edges into connected components (isolated vertices dropped).
// Components keep global vertex labels and clause indices.
std::vector<BicoloredMultigraph> components(const BicoloredMultigraph& g);

// Lazy mixed-radix product: emits the OR of one choice per part.
// No parts yields a single all-zero vector of length `width`.
std::size_t combine_components(const std::vector<std::vector<Signature>>& parts, std::size_t width,
                               const std::function<bool(const Signature&)>& sink);

Signature to_signature(const BicoloredMultigraph& g, const EdgeSet& h, std::size_t num_clauses);
EdgeSet from_signature(const BicoloredMultigraph& g, const Signature& sigma);

// Maximal (or minimal) signatures of a formula with clauses of width <= 2:
// preprocessing, one proximity search per component, product, expansion.
// Throws EngineRefusal on a wider clause.
ProximityStats enumerate_max_2xor(const XorCnf& phi, const RecordSink& sink);
ProximityStats enumerate_min_2xor(const XorCnf& phi, const RecordSink& sink);

// `edge <id> <a> <b> <red|blue>` per line, 1-based ids; `c` lines are comments.
void emit_graph_dump(std::ostream& out, const BicoloredMultigraph& g);
BicoloredMultigraph parse_graph_dump(std::istream& in);
BicoloredMultigraph parse_graph_dump_string(std::string_view text);

}  // namespace xorsig::rb
