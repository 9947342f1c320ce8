#include "xorsig/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace xorsig::gen {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<Var> sample_vars(Rng& rng, const std::vector<Var>& pool, std::size_t k) {
    std::vector<Var> out;
    std::sample(pool.begin(), pool.end(), std::back_inserter(out), k, rng);
    return out;
}

}  // namespace

XorCnf random_xor_cnf(Rng& rng, std::size_t n, std::size_t m, std::size_t max_width) {
    XorCnf phi(n);
    if (n == 0) return phi;
    std::vector<Var> pool(n);
    std::iota(pool.begin(), pool.end(), Var{1});
    const std::size_t wmax = std::min(max_width, n);
    for (std::size_t j = 0; j < m; ++j) {
        auto k = uniform(rng, 1, wmax);
        phi.add(XorClause(sample_vars(rng, pool, k), coin(rng, 0.5)));
    }
    return phi;
}

XorCnf random_2xor(Rng& rng, const TwoXorShape& shape) {
    XorCnf phi(shape.n);
    if (shape.n == 0) return phi;
    const std::size_t blocks = std::clamp<std::size_t>(shape.components, 1, shape.n);
    // Variable v belongs to block (v - 1) % blocks.
    std::vector<std::vector<Var>> pools(blocks);
    for (Var v = 1; v <= shape.n; ++v) pools[(v - 1) % blocks].push_back(v);

    for (std::size_t j = 0; j < shape.m; ++j) {
        if (j > 0 && coin(rng, shape.parallel_prob)) {
            const auto& prev = phi[uniform(rng, 0, j - 1)];
            phi.add(prev.negated());
            continue;
        }
        const auto& pool = pools[j % blocks];
        bool unit = pool.size() < 2 || coin(rng, shape.unit_prob);
        phi.add(XorClause(sample_vars(rng, pool, unit ? 1 : 2), coin(rng, 0.5)));
    }
    return phi;
}

rb::BicoloredMultigraph random_rb_graph(Rng& rng, std::size_t num_vertices, std::size_t extra) {
    rb::BicoloredMultigraph g(num_vertices);
    if (num_vertices < 2) return g;
    std::set<std::tuple<rb::Vertex, rb::Vertex, bool>> taken;
    auto color = [&] { return coin(rng, 0.5) ? rb::Color::Blue : rb::Color::Red; };
    auto add = [&](rb::Vertex a, rb::Vertex b, rb::Color c) {
        if (!taken.emplace(std::min(a, b), std::max(a, b), c == rb::Color::Blue).second) return;
        g.add_edge(a, b, c, g.num_edges());
    };
    for (rb::Vertex v = 1; v < num_vertices; ++v) add(uniform(rng, 0, v - 1), v, color());
    for (std::size_t k = 0; k < extra; ++k) {
        rb::Vertex a = uniform(rng, 0, num_vertices - 1), b = uniform(rng, 0, num_vertices - 2);
        if (b >= a) ++b;
        add(a, b, color());
    }
    return g;
}

hardness::Cnf random_3cnf(Rng& rng, std::size_t n, std::size_t m) {
    hardness::Cnf cnf;
    cnf.num_vars = n;
    std::vector<Var> pool(n);
    std::iota(pool.begin(), pool.end(), Var{1});
    for (std::size_t j = 0; j < m; ++j) {
        auto k = uniform(rng, 1, std::min<std::size_t>(3, n));
        std::vector<int> clause;
        for (Var v : sample_vars(rng, pool, k)) {
            clause.push_back(coin(rng, 0.5) ? static_cast<int>(v) : -static_cast<int>(v));
        }
        cnf.clauses.push_back(std::move(clause));
    }
    return cnf;
}

}  // namespace xorsig::gen
