#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "xorsig/error.hpp"
#include "xorsig/flashlight.hpp"
#include "xorsig/maxgen.hpp"
#include "xorsig/oracle.hpp"
#include "xorsig/random.hpp"

using namespace xorsig;

namespace {

std::vector<Signature> collect(const XorCnf& phi, FlashlightStats* stats = nullptr) {
    std::vector<Signature> out;
    auto st = enumerate_all(phi, [&](const Signature& s) {
        out.push_back(s);
        return true;
    });
    if (stats) *stats = st;
    return out;
}

}  // namespace

TEST_CASE("extendable") {
    auto tri = fixtures::triangle();
    CHECK(extendable(tri, {0, 1}, {}));
    CHECK_FALSE(extendable(tri, {0, 1, 2}, {}));
    CHECK(extendable(tri, {}, {0, 1, 2}));
    CHECK_THROWS_AS(extendable(tri, {0}, {0}), ContractViolation);
}

TEST_CASE("triangle signatures in depth-first 1-first order") {
    auto sigs = collect(fixtures::triangle());
    std::vector<std::string> got;
    for (const auto& s : sigs) got.push_back(s.to_string());
    CHECK(got == std::vector<std::string>{"110", "101", "011", "000"});
}

TEST_CASE("small fixed formulas") {
    CHECK(fixtures::as_strings(collect(fixtures::disjoint_diseq())) == std::set<std::string>{"00", "01", "10", "11"});
    CHECK(fixtures::as_strings(collect(fixtures::eq_neq())) == std::set<std::string>{"10", "01"});

    auto empty = collect(XorCnf(3));
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].size() == 0);
}

TEST_CASE("satisfiable formulas emit all-ones first") {
    XorCnf phi(3, {XorClause({1, 2}, false), XorClause({2, 3}, true), XorClause({1}, true)});
    auto sigs = collect(phi);
    REQUIRE_FALSE(sigs.empty());
    CHECK(sigs.front().to_string() == "111");
}

TEST_CASE("sink can stop the enumeration") {
    std::size_t seen = 0;
    auto st = enumerate_all(fixtures::triangle(), [&](const Signature&) { return ++seen < 2; });
    CHECK(seen == 2);
    CHECK(st.emitted == 2);
}

TEST_CASE("flashlight equals brute force with bounded work") {
    gen::Rng rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + trial % 12;
        std::size_t m = trial % 21;
        auto phi = gen::random_xor_cnf(rng, n, m, 4);
        FlashlightStats st;
        auto sigs = collect(phi, &st);
        auto expect = fixtures::as_strings(oracle::brute_all(phi));
        auto got = fixtures::as_strings(sigs);
        CHECK(got.size() == sigs.size());  // no duplicates
        CHECK(got == expect);
        CHECK(st.oracle_calls <= 2 * m * (st.emitted + 1));
        CHECK(st.max_depth <= m);
        for (const auto& s : sigs) CHECK(is_signature(phi, s));
    }
}
