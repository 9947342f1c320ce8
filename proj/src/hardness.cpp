#include "xorsig/hardness.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "xorsig/error.hpp"
#include "xorsig/parity_dsu.hpp"

namespace xorsig::hardness {

Cnf parse_dimacs(std::istream& in) {
    Cnf cnf;
    bool have_header = false;
    std::size_t declared = 0;
    std::vector<int> current;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok == "%") continue;
        if (tok == "p") {
            std::string fmt;
            long long nv = -1, nc = -1;
            if (have_header || !(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0) {
                throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
            }
            have_header = true;
            cnf.num_vars = static_cast<std::size_t>(nv);
            declared = static_cast<std::size_t>(nc);
            continue;
        }
        if (!have_header) throw ParseError(lineno, "clause before 'p cnf' header");
        do {
            long long lit = 0;
            std::size_t pos = 0;
            try {
                lit = std::stoll(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError(lineno, "invalid literal '" + tok + "'");
            }
            if (pos != tok.size()) throw ParseError(lineno, "invalid literal '" + tok + "'");
            if (lit == 0) {
                if (current.empty()) throw ParseError(lineno, "empty clause");
                cnf.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (static_cast<std::size_t>(lit < 0 ? -lit : lit) > cnf.num_vars) {
                throw ParseError(lineno, "variable out of range in literal " + tok);
            }
            current.push_back(static_cast<int>(lit));
        } while (ls >> tok);
    }
    if (!have_header) throw ParseError(lineno, "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(lineno, "last clause not terminated by 0");
    if (cnf.clauses.size() != declared) {
        throw ParseError(lineno, "header declares " + std::to_string(declared) + " clauses, found " +
                                     std::to_string(cnf.clauses.size()));
    }
    return cnf;
}

Cnf parse_dimacs_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

bool cnf_satisfied(const Cnf& cnf, const Assignment& alpha) {
    return std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const std::vector<int>& cl) {
        return std::any_of(cl.begin(), cl.end(), [&](int lit) {
            bool v = alpha.value(static_cast<Var>(lit < 0 ? -lit : lit));
            return lit > 0 ? v : !v;
        });
    });
}

std::optional<EdgeId> ReductionInstance::find_edge(Vertex a, Vertex b) const {
    for (EdgeId e = 0; e < graph.edges.size(); ++e) {
        auto [p, q] = graph.edges[e];
        if ((p == a && q == b) || (p == b && q == a)) return e;
    }
    return std::nullopt;
}

ReductionInstance reduce_3sat(const Cnf& cnf) {
    ReductionInstance inst;
    inst.num_vars = cnf.num_vars;
    inst.num_clauses = cnf.clauses.size();
    inst.graph.num_vertices = 2 * inst.num_vars + inst.num_clauses + 1;
    auto& edges = inst.graph.edges;

    for (std::size_t i = 1; i <= inst.num_vars; ++i) {
        inst.must_have.push_back(edges.size());
        edges.emplace_back(inst.x(i), inst.y(i));
    }
    for (std::size_t j = 1; j <= inst.num_clauses; ++j) {
        const auto& clause = cnf.clauses[j - 1];
        if (clause.empty()) throw ContractViolation("reduce_3sat: empty clause " + std::to_string(j));
        if (clause.size() > 3) throw ContractViolation("reduce_3sat: clause " + std::to_string(j) + " has more than 3 literals");
        for (int lit : clause) {
            auto i = static_cast<std::size_t>(lit < 0 ? -lit : lit);
            if (i == 0 || i > inst.num_vars) throw ContractViolation("reduce_3sat: literal out of range");
            Vertex lv = lit > 0 ? inst.x(i) : inst.y(i);
            if (!inst.find_edge(lv, inst.c(j))) edges.emplace_back(lv, inst.c(j));
        }
    }
    const Vertex u = inst.u();
    for (Vertex v = 0; v < u; ++v) {
        if (v >= 2 * inst.num_vars) inst.must_avoid.push_back(edges.size());
        edges.emplace_back(v, u);
    }
    return inst;
}

bool is_bipartite(const SimpleGraph& g, const BitVec& edges) {
    ParityDsu dsu(g.num_vertices);
    for (auto e : edges.ones()) {
        if (!dsu.unite(g.edges[e].first, g.edges[e].second, true)) return false;
    }
    return true;
}

bool is_maximal_bipartite(const SimpleGraph& g, const BitVec& edges) {
    ParityDsu dsu(g.num_vertices);
    for (auto e : edges.ones()) {
        if (!dsu.unite(g.edges[e].first, g.edges[e].second, true)) return false;
    }
    for (EdgeId e = 0; e < g.edges.size(); ++e) {
        if (!edges.test(e) && dsu.consistent(g.edges[e].first, g.edges[e].second, true)) return false;
    }
    return true;
}

std::optional<BitVec> brute_extension(const SimpleGraph& g, const IndexList& must, const IndexList& avoid,
                                      std::size_t cap) {
    const std::size_t nv = g.num_vertices;
    const std::size_t ne = g.edges.size();

    // Edges of A must cross the coloring, edges of B must not.
    ParityDsu constraints(nv);
    for (auto e : must) {
        if (!constraints.unite(g.edges[e].first, g.edges[e].second, true)) return std::nullopt;
    }
    for (auto e : avoid) {
        if (!constraints.unite(g.edges[e].first, g.edges[e].second, false)) return std::nullopt;
    }
    std::vector<std::size_t> block_of(nv);
    std::vector<std::size_t> roots;
    for (Vertex v = 0; v < nv; ++v) {
        auto r = constraints.find(v).first;
        auto it = std::find(roots.begin(), roots.end(), r);
        block_of[v] = static_cast<std::size_t>(it - roots.begin());
        if (it == roots.end()) roots.push_back(r);
    }
    if (roots.empty()) return ne == 0 ? std::optional<BitVec>(BitVec(0)) : std::nullopt;
    // The first block's orientation is fixed: colorings and their swaps give the same edge sets.
    const std::size_t free_blocks = roots.size() - 1;
    if (free_blocks > cap) {
        throw EngineRefusal("extension search needs 2^" + std::to_string(free_blocks) + " colorings, cap is 2^" +
                            std::to_string(cap));
    }

    BitVec avoid_set(ne);
    for (auto e : avoid) avoid_set.set(e);

    std::vector<bool> side(nv);
    for (std::size_t mask = 0; mask < (std::size_t{1} << free_blocks); ++mask) {
        for (Vertex v = 0; v < nv; ++v) {
            bool flip = block_of[v] > 0 && ((mask >> (block_of[v] - 1)) & 1u);
            side[v] = constraints.find(v).second ^ flip;
        }
        BitVec h(ne);
        ParityDsu cut(nv);
        for (EdgeId e = 0; e < ne; ++e) {
            auto [a, b] = g.edges[e];
            if (side[a] != side[b]) {
                h.set(e);
                cut.unite(a, b, true);
            }
        }
        // Close greedily in ascending edge order; a closure that picks up a
        // B edge is discarded (the coloring of that closure is visited anyway).
        bool ok = true;
        for (EdgeId e = 0; e < ne && ok; ++e) {
            if (h.test(e)) continue;
            auto [a, b] = g.edges[e];
            if (cut.unite(a, b, true)) {
                if (avoid_set.test(e)) ok = false;
                h.set(e);
            }
        }
        if (ok) return h;
    }
    return std::nullopt;
}

Assignment decode_witness(const ReductionInstance& inst, const BitVec& h) {
    const auto& g = inst.graph;
    if (h.size() != g.edges.size()) throw ContractViolation("decode_witness: edge set size mismatch");
    if (!is_maximal_bipartite(g, h)) throw ContractViolation("decode_witness: not a maximal bipartite subgraph");
    for (auto e : inst.must_have) {
        if (!h.test(e)) throw ContractViolation("decode_witness: witness misses an edge of A");
    }
    for (auto e : inst.must_avoid) {
        if (h.test(e)) throw ContractViolation("decode_witness: witness contains an edge of B");
    }
    Assignment alpha(inst.num_vars);
    for (std::size_t i = 1; i <= inst.num_vars; ++i) {
        auto ux = inst.find_edge(inst.u(), inst.x(i));
        auto uy = inst.find_edge(inst.u(), inst.y(i));
        bool has_x = ux && h.test(*ux);
        bool has_y = uy && h.test(*uy);
        if (has_x == has_y) throw ContractViolation("decode_witness: exactly one of u-x_i, u-y_i must be present");
        alpha.assign(i - 1, has_x);
    }
    return alpha;
}

void emit_edge_dump(std::ostream& out, const ReductionInstance& inst) {
    out << "c vertices " << inst.graph.num_vertices << " vars " << inst.num_vars << " clauses " << inst.num_clauses
        << '\n';
    out << "c A";
    for (auto e : inst.must_have) out << ' ' << e + 1;
    out << "\nc B";
    for (auto e : inst.must_avoid) out << ' ' << e + 1;
    out << '\n';
    for (EdgeId e = 0; e < inst.graph.edges.size(); ++e) {
        out << "edge " << e + 1 << ' ' << inst.graph.edges[e].first << ' ' << inst.graph.edges[e].second
            << " blue\n";
    }
}

XorCnf as_disequalities(const SimpleGraph& g) {
    XorCnf phi(g.num_vertices);
    for (auto [a, b] : g.edges) phi.add(XorClause({a + 1, b + 1}, true));
    return phi;
}

}  // namespace xorsig::hardness
