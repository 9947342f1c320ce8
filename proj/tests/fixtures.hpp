#pragma once

// Shared formulas and test-only brute-force references. Nothing here calls
// into the engines under test.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "xorsig/formula.hpp"
#include "xorsig/rb2xor.hpp"

namespace fixtures {

using xorsig::Signature;
using xorsig::XorClause;
using xorsig::XorCnf;

// Odd triangle: x1+x2=1, x2+x3=1, x1+x3=1.
inline XorCnf triangle() {
    return XorCnf(3, {XorClause({1, 2}, true), XorClause({2, 3}, true), XorClause({1, 3}, true)});
}

// x1 != x2, x3 != x4.
inline XorCnf disjoint_diseq() { return XorCnf(4, {XorClause({1, 2}, true), XorClause({3, 4}, true)}); }

// x1 = x2 and x1 != x2.
inline XorCnf eq_neq() { return XorCnf(2, {XorClause({1, 2}, false), XorClause({1, 2}, true)}); }

inline std::set<std::string> as_strings(const std::vector<Signature>& sigs) {
    std::set<std::string> out;
    for (const auto& s : sigs) out.insert(s.to_string());
    return out;
}

inline std::string data_path(const std::string& name) { return std::string(XORSIG_TEST_DATA) + "/" + name; }

inline xorsig::rb::BicoloredMultigraph nine_vertex_graph() {
    std::ifstream in(data_path("nine_vertex.txt"));
    return xorsig::rb::parse_graph_dump(in);
}

// Edge ids (0-based) of H in nine_vertex.txt.
inline xorsig::rb::EdgeSet nine_vertex_h() {
    xorsig::rb::EdgeSet h(17);
    for (std::size_t id : {1, 3, 4, 5, 7, 8, 9, 11, 13, 15, 16}) h.set(id - 1);
    return h;
}

// Maximal red-blue bipartite edge sets by vertex 2-colorings: every maximal
// solution is exactly the set of edges a coloring agrees with.
inline std::set<std::string> coloring_max_rb(const xorsig::rb::BicoloredMultigraph& g) {
    using xorsig::rb::Color;
    const std::size_t nv = g.num_vertices();
    std::set<std::string> agreeing;
    std::vector<std::string> sets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nv); ++mask) {
        std::string s(g.num_edges(), '0');
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
            const auto& ed = g.edge(e);
            bool differ = ((mask >> ed.a) & 1u) != ((mask >> ed.b) & 1u);
            if (differ == (ed.color == Color::Blue)) s[e] = '1';
        }
        if (agreeing.insert(s).second) sets.push_back(s);
    }
    auto subset = [](const std::string& a, const std::string& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == '1' && b[i] == '0') return false;
        }
        return true;
    };
    std::set<std::string> out;
    for (const auto& a : sets) {
        bool dominated = std::any_of(sets.begin(), sets.end(), [&](const std::string& b) { return a != b && subset(a, b); });
        if (!dominated) out.insert(a);
    }
    return out;
}

}  // namespace fixtures
