#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "xorsig/error.hpp"
#include "xorsig/hardness.hpp"
#include "xorsig/random.hpp"
#include "xorsig/rb2xor.hpp"

using namespace xorsig;
using namespace xorsig::hardness;

namespace {

Cnf three_clause() {
    std::ifstream in(fixtures::data_path("three_clause.cnf"));
    return parse_dimacs(in);
}

bool brute_sat(const Cnf& cnf) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << cnf.num_vars); ++mask) {
        Assignment alpha(cnf.num_vars);
        for (std::size_t i = 0; i < cnf.num_vars; ++i) alpha.assign(i, (mask >> i) & 1u);
        if (cnf_satisfied(cnf, alpha)) return true;
    }
    return false;
}

std::optional<BitVec> extend(const ReductionInstance& inst) {
    return brute_extension(inst.graph, inst.must_have, inst.must_avoid);
}

std::set<std::pair<Vertex, Vertex>> pairs_of(const ReductionInstance& inst, const IndexList& ids) {
    std::set<std::pair<Vertex, Vertex>> out;
    for (auto e : ids) out.insert(std::minmax(inst.graph.edges[e].first, inst.graph.edges[e].second));
    return out;
}

// The witness a model induces: u and every clause vertex on
// one side, true literals on the other.
BitVec witness_from_model(const ReductionInstance& inst, const std::vector<bool>& model) {
    std::vector<bool> side(inst.graph.num_vertices, false);
    for (std::size_t i = 1; i <= inst.num_vars; ++i) {
        side[inst.x(i)] = model[i - 1];
        side[inst.y(i)] = !model[i - 1];
    }
    BitVec h(inst.graph.edges.size());
    for (EdgeId e = 0; e < inst.graph.edges.size(); ++e) {
        auto [a, b] = inst.graph.edges[e];
        if (side[a] != side[b]) h.set(e);
    }
    return h;
}

}  // namespace

TEST_CASE("parse_dimacs") {
    auto cnf = parse_dimacs_string("c hi\np cnf 3 2\n1 -2 0\n3\n0\n");
    CHECK(cnf.num_vars == 3);
    REQUIRE(cnf.clauses.size() == 2);
    CHECK(cnf.clauses[0] == std::vector<int>{1, -2});
    CHECK(cnf.clauses[1] == std::vector<int>{3});

    auto fails_on = [](const char* text, std::size_t line) {
        try {
            parse_dimacs_string(text);
        } catch (const ParseError& e) {
            return e.line() == line;
        }
        return false;
    };
    CHECK(fails_on("p cnf 2\n", 1));
    CHECK(fails_on("1 2 0\n", 1));
    CHECK(fails_on("p cnf 2 1\n1 x 0\n", 2));
    CHECK(fails_on("p cnf 2 1\n1 3 0\n", 2));
    CHECK(fails_on("p cnf 2 1\n0\n", 2));
    CHECK_THROWS_AS(parse_dimacs_string("p cnf 2 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_string("p cnf 2 2\n1 2 0\n"), ParseError);
}

TEST_CASE("three-clause instance") {
    auto cnf = three_clause();
    auto inst = reduce_3sat(cnf);
    CHECK(inst.graph.num_vertices == 10);
    CHECK(pairs_of(inst, inst.must_have) ==
          std::set<std::pair<Vertex, Vertex>>{{inst.x(1), inst.y(1)}, {inst.x(2), inst.y(2)}, {inst.x(3), inst.y(3)}});
    CHECK(pairs_of(inst, inst.must_avoid) ==
          std::set<std::pair<Vertex, Vertex>>{{inst.c(1), inst.u()}, {inst.c(2), inst.u()}, {inst.c(3), inst.u()}});
    CHECK(inst.find_edge(inst.x(1), inst.c(1)));
    CHECK(inst.find_edge(inst.y(1), inst.c(2)));
    CHECK(inst.find_edge(inst.y(3), inst.c(3)));
    CHECK_FALSE(inst.find_edge(inst.x(1), inst.c(2)));
    for (Vertex v = 0; v < inst.u(); ++v) CHECK(inst.find_edge(v, inst.u()));

    auto h = extend(inst);
    REQUIRE(h);
    CHECK(is_maximal_bipartite(inst.graph, *h));
    CHECK(cnf_satisfied(cnf, decode_witness(inst, *h)));

    auto expected = witness_from_model(inst, {true, true, false});
    CHECK(decode_witness(inst, expected).to_string() == "110");
}

TEST_CASE("small reductions") {
    Cnf single{1, {{1}}};
    auto inst = reduce_3sat(single);
    CHECK(inst.graph.num_vertices == 4);
    CHECK(inst.graph.edges.size() == 5);  // x1y1, x1c1, and u to three vertices
    CHECK(inst.find_edge(inst.x(1), inst.c(1)));
    CHECK_FALSE(inst.find_edge(inst.y(1), inst.c(1)));
    auto h = extend(inst);
    REQUIRE(h);
    CHECK(decode_witness(inst, *h).to_string() == "1");

    auto tri = reduce_3sat(Cnf{1, {}});
    CHECK(tri.graph.num_vertices == 3);
    CHECK(tri.graph.edges.size() == 3);
    CHECK(tri.must_avoid.empty());
    CHECK(extend(tri));

    CHECK_THROWS_AS(reduce_3sat(Cnf{2, {{}}}), ContractViolation);
    CHECK_THROWS_AS(reduce_3sat(Cnf{4, {{1, 2, 3, 4}}}), ContractViolation);
}

TEST_CASE("all eight clauses on three variables have no witness") {
    Cnf full{3, {}};
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> c;
        for (int i = 0; i < 3; ++i) c.push_back((mask >> i) & 1 ? i + 1 : -(i + 1));
        full.clauses.push_back(c);
    }
    CHECK_FALSE(brute_sat(full));
    CHECK_FALSE(extend(reduce_3sat(full)));
}

TEST_CASE("extension without forbidden edges always succeeds") {
    gen::Rng rng(149);
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = reduce_3sat(gen::random_3cnf(rng, 1 + trial % 5, trial % 6));
        auto h = brute_extension(inst.graph, inst.must_have, {});
        REQUIRE(h);
        CHECK(is_maximal_bipartite(inst.graph, *h));
        for (auto e : inst.must_have) CHECK(h->test(e));
    }
}

TEST_CASE("decode_witness rejects bad witnesses") {
    auto inst = reduce_3sat(three_clause());
    BitVec empty(inst.graph.edges.size());
    CHECK_THROWS_AS(decode_witness(inst, empty), ContractViolation);
    CHECK_THROWS_AS(decode_witness(inst, BitVec(2)), ContractViolation);
    // Sides that put every literal with u: maximal but misses A.
    BitVec star(inst.graph.edges.size());
    for (auto c : {inst.c(1), inst.c(2), inst.c(3)}) star.set(*inst.find_edge(c, inst.u()));
    CHECK_THROWS_AS(decode_witness(inst, star), ContractViolation);
}

TEST_CASE("satisfiable exactly when a witness exists") {
    gen::Rng rng(151);
    std::size_t sat = 0, unsat = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto cnf = gen::random_3cnf(rng, 1 + trial % 6, 1 + trial % 10);
        auto inst = reduce_3sat(cnf);
        auto h = extend(inst);
        bool expect = brute_sat(cnf);
        CHECK(h.has_value() == expect);
        (expect ? sat : unsat)++;
        if (!h) continue;
        CHECK(is_maximal_bipartite(inst.graph, *h));
        for (auto e : inst.must_avoid) CHECK_FALSE(h->test(e));
        CHECK(cnf_satisfied(cnf, decode_witness(inst, *h)));
    }
    CHECK(sat > 20);
    CHECK(unsat > 20);
}

TEST_CASE("bipartite checks") {
    SimpleGraph tri{3, {{0, 1}, {1, 2}, {0, 2}}};
    BitVec all(3);
    all.set(0);
    all.set(1);
    all.set(2);
    CHECK_FALSE(is_bipartite(tri, all));
    BitVec two(3);
    two.set(0);
    two.set(1);
    CHECK(is_maximal_bipartite(tri, two));
    BitVec one(3);
    one.set(0);
    CHECK(is_bipartite(tri, one));
    CHECK_FALSE(is_maximal_bipartite(tri, one));
}

TEST_CASE("edge dump and disequality view") {
    auto inst = reduce_3sat(three_clause());
    std::ostringstream out;
    emit_edge_dump(out, inst);
    auto g = rb::parse_graph_dump_string(out.str());
    CHECK(g.num_edges() == inst.graph.edges.size());
    for (const auto& e : g.edges()) CHECK(e.color == rb::Color::Blue);
    CHECK(out.str().find("c A") != std::string::npos);
    CHECK(out.str().find("c B") != std::string::npos);

    auto phi = as_disequalities(inst.graph);
    CHECK(phi.num_clauses() == inst.graph.edges.size());
    CHECK(phi.num_vars() == inst.graph.num_vertices);
    for (const auto& c : phi.clauses()) CHECK(c.parity);
}
