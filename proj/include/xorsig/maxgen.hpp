#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "xorsig/formula.hpp"

namespace xorsig {

struct MaxSigRecord {
    Signature signature;
    Assignment witness;
};

// Returning false from a sink stops the enumeration.
using RecordSink = std::function<bool(const MaxSigRecord&)>;

bool is_signature(const XorCnf& phi, const Signature& sigma);
// Assumes nothing; a non-signature is neither maximal nor minimal.
bool is_maximal(const XorCnf& phi, const Signature& sigma);
bool is_minimal(const XorCnf& phi, const Signature& sigma);

// Greedy completion: the seed clauses first, then every clause of `order`
// (ascending indices when omitted) that keeps the system feasible. The result
// is the maximal signature whose one-set is the collected subsystem.
MaxSigRecord gc(const XorCnf& phi, const IndexList& seed, const std::optional<IndexList>& order = std::nullopt);

inline constexpr std::size_t kDefaultRankCap = 20;

struct ExactOptions {
    std::size_t rank_cap = kDefaultRankCap;
};

struct EngineStats {
    std::size_t emitted = 0;
    std::size_t gc_calls = 0;  // supergraph engine only
};

// Walks all 2^rank signatures in Gray-code order and keeps the maximal ones.
// Output order: popcount descending, then lexicographic. Throws EngineRefusal
// when the rank exceeds the cap.
EngineStats enumerate_max_exact(const XorCnf& phi, const RecordSink& sink, ExactOptions opts = {});

struct SupergraphOptions {
    // Largest rank of a maximal subsystem the engine will expand. Expanding a
    // subsystem of rank k costs 2^(k-1) hyperplane probes per missing clause.
    std::size_t rank_cap = kDefaultRankCap;
};

// Breadth-first saturation of the solution graph, starting from gc(phi, {}).
// For a maximal set S and a clause r outside it, the neighbors are the two
// greedy completions seeded with r plus the completions of every maximal
// feasible subset of S + r that contains r. Signatures are emitted on discovery.
EngineStats enumerate_max_supergraph(const XorCnf& phi, const RecordSink& sink, SupergraphOptions opts = {});

enum class MaxEngine { Exact, Supergraph };

// Minimal signatures as complements of the maximal signatures of the inverse formula.
EngineStats enumerate_min(const XorCnf& phi, const RecordSink& sink, MaxEngine engine = MaxEngine::Exact,
                          ExactOptions opts = {});

EngineStats enumerate_max(const XorCnf& phi, const RecordSink& sink, MaxEngine engine = MaxEngine::Exact,
                          ExactOptions opts = {});

}  // namespace xorsig
