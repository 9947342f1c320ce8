#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "xorsig/formula.hpp"
#include "xorsig/hardness.hpp"
#include "xorsig/rb2xor.hpp"

// Seeded instance generators for tests and `xorsig bench`.
namespace xorsig::gen {

using Rng = std::mt19937_64;

// m clauses, each of width 1..max_width over n variables, random parity.
XorCnf random_xor_cnf(Rng& rng, std::size_t n, std::size_t m, std::size_t max_width);

struct TwoXorShape {
    std::size_t n = 8;
    std::size_t m = 12;
    double unit_prob = 0.15;      // chance a clause is a unit clause
    double parallel_prob = 0.2;   // chance a 2-clause reuses a previous pair with flipped parity
    std::size_t components = 1;   // variables are split into this many disjoint blocks
};

// Clauses of width at most two. May contain duplicates; callers preprocess.
XorCnf random_2xor(Rng& rng, const TwoXorShape& shape);

// Connected multigraph: a random spanning tree plus up to `extra` further
// edges (fewer when a drawn pair and color is already taken). Colors are fair coins.
rb::BicoloredMultigraph random_rb_graph(Rng& rng, std::size_t num_vertices, std::size_t extra);

// Random CNF with clauses of 1..3 distinct variables.
hardness::Cnf random_3cnf(Rng& rng, std::size_t n, std::size_t m);

}  // namespace xorsig::gen
