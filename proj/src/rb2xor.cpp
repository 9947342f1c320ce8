#include "xorsig/rb2xor.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_set>

#include "xorsig/error.hpp"
#include "xorsig/gf2.hpp"
#include "xorsig/parity_dsu.hpp"

namespace xorsig::rb {

EdgeId BicoloredMultigraph::add_edge(Vertex a, Vertex b, Color color, ClauseIndex clause) {
    if (a == b) throw ContractViolation("edge endpoints must differ");
    if (a >= adj_.size() || b >= adj_.size()) throw ContractViolation("edge endpoint out of range");
    for (EdgeId e : adj_[a]) {
        const Edge& ed = edges_[e];
        if (ed.other(a) == b && ed.color == color) {
            throw ContractViolation("duplicate " + std::string(color == Color::Red ? "red" : "blue") + " edge " +
                                    std::to_string(a) + "-" + std::to_string(b));
        }
    }
    EdgeId id = edges_.size();
    edges_.push_back({a, b, color, clause});
    adj_[a].push_back(id);
    adj_[b].push_back(id);
    return id;
}

EdgeSet BicoloredMultigraph::full_set() const {
    EdgeSet s(edges_.size());
    for (EdgeId e = 0; e < edges_.size(); ++e) s.set(e);
    return s;
}

BicoloredMultigraph build_graph(const XorCnf& phi) {
    bool units = false;
    for (std::size_t j = 0; j < phi.num_clauses(); ++j) {
        if (phi[j].width() > 2) {
            throw ContractViolation("build_graph: clause " + std::to_string(j + 1) + " has " +
                                    std::to_string(phi[j].width()) + " variables");
        }
        units |= phi[j].width() == 1;
    }
    BicoloredMultigraph g(phi.num_vars() + (units ? 1 : 0));
    g.has_gadget = units;
    for (std::size_t j = 0; j < phi.num_clauses(); ++j) {
        const auto& c = phi[j];
        Color color = c.parity ? Color::Blue : Color::Red;
        if (c.width() == 1) {
            // (x) is x != u and (not x) is x = u, with the gadget u read as false.
            g.add_edge(0, g.var_vertex(c.vars[0]), color, j);
        } else {
            g.add_edge(g.var_vertex(c.vars[0]), g.var_vertex(c.vars[1]), color, j);
        }
    }
    return g;
}

namespace {

std::vector<EdgeId> ascending(const EdgeSet& s) { return s.ones(); }

}  // namespace

RbCheck check_rb_bipartite(const BicoloredMultigraph& g, const EdgeSet& s) {
    return check_rb_bipartite(g, ascending(s));
}

RbCheck check_rb_bipartite(const BicoloredMultigraph& g, const std::vector<EdgeId>& edge_order) {
    const std::size_t nv = g.num_vertices();
    std::vector<std::vector<EdgeId>> adj(nv);
    Bipartition part{std::vector<bool>(nv, false), BitVec(nv)};
    for (EdgeId e : edge_order) {
        const Edge& ed = g.edge(e);
        adj[ed.a].push_back(e);
        adj[ed.b].push_back(e);
        part.present.set(ed.a);
        part.present.set(ed.b);
    }

    std::vector<bool> visited(nv, false);
    std::vector<EdgeId> parent_edge(nv, 0);
    std::vector<std::size_t> depth(nv, 0);

    for (Vertex root = 0; root < nv; ++root) {
        if (!part.present.test(root) || visited[root]) continue;
        visited[root] = true;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (EdgeId e : adj[v]) {
                const Edge& ed = g.edge(e);
                Vertex w = ed.other(v);
                bool want = part.side[v] ^ (ed.color == Color::Blue);
                if (!visited[w]) {
                    visited[w] = true;
                    part.side[w] = want;
                    parent_edge[w] = e;
                    depth[w] = depth[v] + 1;
                    q.push(w);
                } else if (part.side[w] != want) {
                    // Tree paths from both endpoints up to their meeting point, plus e.
                    RbConflict conflict;
                    std::vector<EdgeId> tail;
                    Vertex x = v, y = w;
                    while (depth[x] > depth[y]) {
                        conflict.cycle.push_back(parent_edge[x]);
                        x = g.edge(parent_edge[x]).other(x);
                    }
                    while (depth[y] > depth[x]) {
                        tail.push_back(parent_edge[y]);
                        y = g.edge(parent_edge[y]).other(y);
                    }
                    while (x != y) {
                        conflict.cycle.push_back(parent_edge[x]);
                        x = g.edge(parent_edge[x]).other(x);
                        tail.push_back(parent_edge[y]);
                        y = g.edge(parent_edge[y]).other(y);
                    }
                    conflict.cycle.insert(conflict.cycle.end(), tail.rbegin(), tail.rend());
                    conflict.cycle.push_back(e);
                    return conflict;
                }
            }
        }
    }
    return part;
}

bool is_rb_bipartite(const BicoloredMultigraph& g, const EdgeSet& s) {
    ParityDsu dsu(g.num_vertices());
    for (EdgeId e : s.ones()) {
        const Edge& ed = g.edge(e);
        if (!dsu.unite(ed.a, ed.b, ed.color == Color::Blue)) return false;
    }
    return true;
}

bool is_connected(const BicoloredMultigraph& g, const EdgeSet& s) {
    ParityDsu dsu(g.num_vertices());
    std::size_t first = g.num_vertices();
    for (EdgeId e : s.ones()) {
        const Edge& ed = g.edge(e);
        dsu.unite(ed.a, ed.b, false);  // only connectivity matters
        first = std::min(first, ed.a);
    }
    for (EdgeId e : s.ones()) {
        if (!dsu.connected(first, g.edge(e).a)) return false;
    }
    return true;
}

EdgeSet gc_rb(const BicoloredMultigraph& g, const EdgeSet& seed) {
    ParityDsu dsu(g.num_vertices());
    EdgeSet h = seed;
    for (EdgeId e : seed.ones()) {
        const Edge& ed = g.edge(e);
        if (!dsu.unite(ed.a, ed.b, ed.color == Color::Blue)) {
            throw ContractViolation("gc_rb: seed is not red-blue bipartite");
        }
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (h.test(e)) continue;
        const Edge& ed = g.edge(e);
        if (dsu.unite(ed.a, ed.b, ed.color == Color::Blue)) h.set(e);
    }
    return h;
}

MuOrder mu(const BicoloredMultigraph& g, const EdgeSet& h) {
    const std::size_t nv = g.num_vertices();
    std::vector<std::vector<Vertex>> nbrs(nv);
    BitVec present(nv);
    for (EdgeId e : h.ones()) {
        const Edge& ed = g.edge(e);
        nbrs[ed.a].push_back(ed.b);
        nbrs[ed.b].push_back(ed.a);
        present.set(ed.a);
        present.set(ed.b);
    }
    MuOrder out;
    if (present.none()) return out;
    for (auto& list : nbrs) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    const std::size_t unseen = nv;
    std::vector<std::size_t> pos(nv, unseen);
    Vertex v0 = present.find_first();
    pos[v0] = 0;
    out.vertices.push_back(v0);
    for (std::size_t head = 0; head < out.vertices.size(); ++head) {
        for (Vertex w : nbrs[out.vertices[head]]) {
            if (pos[w] == unseen) {
                pos[w] = out.vertices.size();
                out.vertices.push_back(w);
            }
        }
    }
    if (out.vertices.size() != present.count()) throw ContractViolation("mu: subgraph is not connected");

    out.edges = h.ones();
    auto key = [&](EdgeId e) {
        auto p = pos[g.edge(e).a], q = pos[g.edge(e).b];
        return std::tuple(std::max(p, q), std::min(p, q), e);
    };
    std::sort(out.edges.begin(), out.edges.end(), [&](EdgeId x, EdgeId y) { return key(x) < key(y); });
    return out;
}

std::pair<EdgeSet, EdgeSet> removables(const BicoloredMultigraph& g, const EdgeSet& h, EdgeId e) {
    if (h.test(e)) throw ContractViolation("removables: edge already in the solution");
    EdgeSet k1 = g.empty_set(), k2 = g.empty_set();
    for (EdgeId f : g.incident(g.edge(e).a)) k1.set(f);
    for (EdgeId f : g.incident(g.edge(e).b)) k2.set(f);
    return {std::move(k1), std::move(k2)};
}

ProximityStats enumerate_max_rb(const BicoloredMultigraph& g, const EdgeSetSink& sink) {
    ProximityStats stats;
    std::unordered_set<BitVec, BitVecHash> seen;
    std::vector<EdgeSet> stack;

    std::size_t calls_since_output = 1;
    ++stats.gc_calls;
    EdgeSet first = gc_rb(g, g.empty_set());
    seen.insert(first);
    stack.push_back(std::move(first));

    while (!stack.empty()) {
        EdgeSet h = std::move(stack.back());
        stack.pop_back();
        stats.max_gc_between_outputs = std::max(stats.max_gc_between_outputs, calls_since_output);
        calls_since_output = 0;
        ++stats.emitted;
        if (!sink(h)) return stats;

        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (h.test(e)) continue;
            auto [k1, k2] = removables(g, h, e);
            for (const EdgeSet* k : {&k1, &k2}) {
                if (k == &k2 && k2 == k1) continue;
                EdgeSet seed = h;
                for (EdgeId f : k->ones()) seed.reset(f);
                seed.set(e);
                ++stats.gc_calls;
                ++calls_since_output;
                EdgeSet next = gc_rb(g, seed);
                if (seen.insert(next).second) stack.push_back(std::move(next));
            }
        }
    }
    return stats;
}

std::vector<BicoloredMultigraph> components(const BicoloredMultigraph& g) {
    ParityDsu dsu(g.num_vertices());
    for (const Edge& ed : g.edges()) {
        dsu.unite(ed.a, ed.b, false);  // only connectivity matters
    }
    std::vector<std::size_t> comp_of_root(g.num_vertices(), g.num_vertices());
    std::vector<BicoloredMultigraph> out;
    for (const Edge& ed : g.edges()) {
        auto r = dsu.find(ed.a).first;
        if (comp_of_root[r] == g.num_vertices()) {
            comp_of_root[r] = out.size();
            out.emplace_back(g.num_vertices());
            out.back().has_gadget = g.has_gadget;
        }
        out[comp_of_root[r]].add_edge(ed.a, ed.b, ed.color, ed.clause);
    }
    return out;
}

std::size_t combine_components(const std::vector<std::vector<Signature>>& parts, std::size_t width,
                               const std::function<bool(const Signature&)>& sink) {
    for (const auto& p : parts) {
        if (p.empty()) return 0;
    }
    std::vector<std::size_t> digit(parts.size(), 0);
    std::size_t emitted = 0;
    while (true) {
        Signature merged(width);
        for (std::size_t i = 0; i < parts.size(); ++i) merged |= parts[i][digit[i]];
        ++emitted;
        if (!sink(merged)) return emitted;
        std::size_t i = 0;
        while (i < parts.size() && ++digit[i] == parts[i].size()) digit[i++] = 0;
        if (i == parts.size()) return emitted;
    }
}

Signature to_signature(const BicoloredMultigraph& g, const EdgeSet& h, std::size_t num_clauses) {
    Signature sig(num_clauses);
    for (EdgeId e : h.ones()) sig.set(g.edge(e).clause);
    return sig;
}

EdgeSet from_signature(const BicoloredMultigraph& g, const Signature& sigma) {
    EdgeSet h = g.empty_set();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (sigma.test(g.edge(e).clause)) h.set(e);
    }
    return h;
}

ProximityStats enumerate_max_2xor(const XorCnf& phi, const RecordSink& sink) {
    for (std::size_t j = 0; j < phi.num_clauses(); ++j) {
        if (phi[j].width() > 2) {
            throw EngineRefusal("proximity engine needs clauses of at most 2 variables; clause " +
                                std::to_string(j + 1) + " has " + std::to_string(phi[j].width()));
        }
    }
    Preprocessed pre = preprocess(phi, PreprocessMode::DedupIsolatedUnits);
    const std::size_t core_m = pre.core.num_clauses();
    BicoloredMultigraph g = build_graph(pre.core);

    ProximityStats total;
    std::vector<std::vector<Signature>> parts;
    for (const auto& comp : components(g)) {
        std::vector<Signature> sols;
        auto st = enumerate_max_rb(comp, [&](const EdgeSet& h) {
            sols.push_back(to_signature(comp, h, core_m));
            return true;
        });
        total.gc_calls += st.gc_calls;
        total.max_gc_between_outputs = std::max(total.max_gc_between_outputs, st.max_gc_between_outputs);
        parts.push_back(std::move(sols));
    }

    total.emitted = 0;
    combine_components(parts, core_m, [&](const Signature& core_sig) {
        Signature sig = pre.remap.expand(core_sig);
        auto witness = solve(restrict(phi, sig.one(), {}));
        if (!witness) throw std::logic_error("proximity engine produced an unsatisfiable one-set");
        ++total.emitted;
        return sink({std::move(sig), std::move(*witness)});
    });
    return total;
}

ProximityStats enumerate_min_2xor(const XorCnf& phi, const RecordSink& sink) {
    return enumerate_max_2xor(inverse(phi), [&](const MaxSigRecord& rec) {
        return sink({rec.signature.complement(), rec.witness});
    });
}

void emit_graph_dump(std::ostream& out, const BicoloredMultigraph& g) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        out << "edge " << e + 1 << ' ' << ed.a << ' ' << ed.b << ' ' << (ed.color == Color::Red ? "red" : "blue")
            << '\n';
    }
}

BicoloredMultigraph parse_graph_dump(std::istream& in) {
    struct Row {
        std::size_t id;
        Vertex a, b;
        Color color;
    };
    std::vector<Row> rows;
    std::size_t nv = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag != "edge") throw ParseError(lineno, "expected 'edge <id> <u> <v> <red|blue>'");
        Row r{};
        std::string color;
        if (!(ls >> r.id >> r.a >> r.b >> color) || (color != "red" && color != "blue")) {
            throw ParseError(lineno, "malformed edge line");
        }
        if (r.id != rows.size() + 1) throw ParseError(lineno, "edge ids must be consecutive from 1");
        r.color = color == "red" ? Color::Red : Color::Blue;
        nv = std::max({nv, r.a + 1, r.b + 1});
        rows.push_back(r);
    }
    BicoloredMultigraph g(nv);
    for (const auto& r : rows) g.add_edge(r.a, r.b, r.color, r.id - 1);
    return g;
}

BicoloredMultigraph parse_graph_dump_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph_dump(in);
}

}  // namespace xorsig::rb
