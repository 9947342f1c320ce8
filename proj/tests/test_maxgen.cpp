#include <doctest.h>

#include "fixtures.hpp"
#include "xorsig/error.hpp"
#include "xorsig/gf2.hpp"
#include "xorsig/maxgen.hpp"
#include "xorsig/oracle.hpp"
#include "xorsig/random.hpp"

using namespace xorsig;
using fixtures::as_strings;

namespace {

std::vector<MaxSigRecord> run(const XorCnf& phi, MaxEngine engine, bool minimal = false) {
    std::vector<MaxSigRecord> out;
    auto sink = [&](const MaxSigRecord& r) {
        out.push_back(r);
        return true;
    };
    if (minimal) {
        enumerate_min(phi, sink, engine);
    } else {
        enumerate_max(phi, sink, engine);
    }
    return out;
}

std::vector<Signature> sigs_of(const std::vector<MaxSigRecord>& recs) {
    std::vector<Signature> out;
    for (const auto& r : recs) out.push_back(r.signature);
    return out;
}

}  // namespace

TEST_CASE("is_signature") {
    auto tri = fixtures::triangle();
    CHECK(is_signature(tri, Signature::from_string("110")));
    CHECK_FALSE(is_signature(tri, Signature::from_string("111")));
    CHECK_FALSE(is_signature(tri, Signature::from_string("100")));
    CHECK_THROWS_AS(is_signature(tri, Signature::from_string("11")), ContractViolation);
}

TEST_CASE("is_maximal and is_minimal") {
    auto tri = fixtures::triangle();
    CHECK(is_maximal(tri, Signature::from_string("110")));
    CHECK_FALSE(is_maximal(tri, Signature::from_string("000")));
    CHECK(is_minimal(tri, Signature::from_string("000")));
    CHECK_FALSE(is_minimal(tri, Signature::from_string("110")));
    CHECK_FALSE(is_maximal(tri, Signature::from_string("111")));  // not a signature
    auto en = fixtures::eq_neq();
    CHECK(is_maximal(en, Signature::from_string("10")));
    CHECK(is_minimal(en, Signature::from_string("10")));
}

TEST_CASE("maximality test agrees with brute force") {
    gen::Rng rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        auto phi = gen::random_xor_cnf(rng, 1 + trial % 8, trial % 10, 3);
        auto maxima = as_strings(oracle::brute_max(phi));
        auto minima = as_strings(oracle::brute_min(phi));
        for (const auto& s : oracle::brute_all(phi)) {
            CHECK(is_maximal(phi, s) == maxima.count(s.to_string()));
            CHECK(is_minimal(phi, s) == minima.count(s.to_string()));
        }
    }
}

TEST_CASE("gc greedy completion") {
    auto tri = fixtures::triangle();
    CHECK(gc(tri, {}).signature.to_string() == "110");
    CHECK(gc(tri, {2}).signature.to_string() == "101");
    auto rec = gc(tri, {1, 2});
    CHECK(rec.signature.to_string() == "011");
    CHECK(evaluate(tri, rec.witness) == rec.signature);
    CHECK_THROWS_AS(gc(tri, {0, 1, 2}), ContractViolation);

    gen::Rng rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        auto phi = gen::random_xor_cnf(rng, 6, 9, 3);
        for (const auto& s : oracle::brute_max(phi)) CHECK(gc(phi, s.one()).signature == s);
    }
}

TEST_CASE("exact engine fixed outputs") {
    auto tri = run(fixtures::triangle(), MaxEngine::Exact);
    std::vector<std::string> got;
    for (const auto& r : tri) got.push_back(r.signature.to_string());
    CHECK(got == std::vector<std::string>{"011", "101", "110"});
    CHECK(as_strings(sigs_of(run(fixtures::disjoint_diseq(), MaxEngine::Exact))) == std::set<std::string>{"11"});
    CHECK(as_strings(sigs_of(run(fixtures::eq_neq(), MaxEngine::Exact))) == std::set<std::string>{"10", "01"});
}

TEST_CASE("exact engine refuses ranks over the cap") {
    XorCnf wide(4, {XorClause({1}, true), XorClause({2}, true), XorClause({3}, true), XorClause({4}, true)});
    auto ignore = [](const MaxSigRecord&) { return true; };
    CHECK_THROWS_AS(enumerate_max_exact(wide, ignore, ExactOptions{3}), EngineRefusal);
    CHECK_NOTHROW(enumerate_max_exact(wide, ignore, ExactOptions{4}));
}

TEST_CASE("minimal signatures of fixed formulas") {
    for (auto engine : {MaxEngine::Exact, MaxEngine::Supergraph}) {
        CHECK(as_strings(sigs_of(run(fixtures::triangle(), engine, true))) == std::set<std::string>{"000"});
        CHECK(as_strings(sigs_of(run(fixtures::disjoint_diseq(), engine, true))) == std::set<std::string>{"00"});
        CHECK(as_strings(sigs_of(run(fixtures::eq_neq(), engine, true))) == std::set<std::string>{"10", "01"});
    }
}

TEST_CASE("supergraph engine fixed outputs") {
    auto tri = run(fixtures::triangle(), MaxEngine::Supergraph);
    CHECK(as_strings(sigs_of(tri)) == std::set<std::string>{"011", "101", "110"});
    CHECK(tri.front().signature.to_string() == "110");
    XorCnf sat(3, {XorClause({1, 2}, false), XorClause({2, 3}, true)});
    auto one = run(sat, MaxEngine::Supergraph);
    REQUIRE(one.size() == 1);
    CHECK(one[0].signature.to_string() == "11");
}

TEST_CASE("engines agree with brute force and each other") {
    gen::Rng rng(67);
    for (std::size_t n : {4, 8, 12}) {
        for (int trial = 0; trial < 120; ++trial) {
            std::size_t m = 1 + trial % 20;
            auto phi = gen::random_xor_cnf(rng, n, m, 4);
            auto expect = as_strings(oracle::brute_max(phi));
            auto exact = run(phi, MaxEngine::Exact);
            auto super = run(phi, MaxEngine::Supergraph);
            CHECK(as_strings(sigs_of(exact)) == expect);
            CHECK(as_strings(sigs_of(super)) == expect);
            CHECK(super.size() == expect.size());
            for (const auto* recs : {&exact, &super}) {
                for (const auto& r : *recs) {
                    CHECK(evaluate(phi, r.witness) == r.signature);
                    CHECK(is_maximal(phi, r.signature));
                }
            }
        }
    }
}

TEST_CASE("minimal engines are the complements of maximal engines on the inverse") {
    gen::Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        auto phi = gen::random_xor_cnf(rng, 1 + trial % 9, 1 + trial % 14, 3);
        auto expect = as_strings(oracle::brute_min(phi));
        for (auto engine : {MaxEngine::Exact, MaxEngine::Supergraph}) {
            auto mins = run(phi, engine, true);
            CHECK(as_strings(sigs_of(mins)) == expect);
            std::set<std::string> dual;
            for (const auto& r : run(inverse(phi), engine)) dual.insert(r.signature.complement().to_string());
            CHECK(as_strings(sigs_of(mins)) == dual);
            for (const auto& r : mins) CHECK(evaluate(phi, r.witness) == r.signature);
        }
    }
}
