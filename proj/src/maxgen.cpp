#include "xorsig/maxgen.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <deque>
#include <unordered_set>

#include "xorsig/error.hpp"
#include "xorsig/gf2.hpp"

namespace xorsig {

bool is_signature(const XorCnf& phi, const Signature& sigma) {
    if (sigma.size() != phi.num_clauses()) {
        throw ContractViolation("is_signature: signature length " + std::to_string(sigma.size()) + " != " +
                                std::to_string(phi.num_clauses()));
    }
    return satisfiable(restrict(phi, sigma.one(), sigma.zero()));
}

bool is_maximal(const XorCnf& phi, const Signature& sigma) {
    if (!is_signature(phi, sigma)) return false;
    EchelonState st(phi.num_vars());
    for (auto i : sigma.one()) st.push_row(phi[i]);
    for (auto j : sigma.zero()) {
        if (!st.would_conflict(phi[j])) return false;
    }
    return true;
}

bool is_minimal(const XorCnf& phi, const Signature& sigma) { return is_maximal(inverse(phi), sigma.complement()); }

MaxSigRecord gc(const XorCnf& phi, const IndexList& seed, const std::optional<IndexList>& order) {
    const std::size_t m = phi.num_clauses();
    EchelonState st(phi.num_vars());
    std::vector<bool> taken(m, false);
    for (auto i : seed) {
        if (i >= m) throw ContractViolation("gc: seed index out of range");
        if (taken[i]) continue;
        if (st.push_row(phi[i]) == PushResult::Conflict) throw ContractViolation("gc: infeasible seed");
        taken[i] = true;
    }
    auto consider = [&](ClauseIndex j) {
        if (taken[j]) return;
        auto cp = st.checkpoint();
        if (st.push_row(phi[j]) == PushResult::Conflict) {
            st.rollback(cp);
        } else {
            taken[j] = true;
        }
    };
    if (order) {
        for (auto j : *order) {
            if (j >= m) throw ContractViolation("gc: order index out of range");
            consider(j);
        }
    } else {
        for (std::size_t j = 0; j < m; ++j) consider(j);
    }
    Assignment witness = st.solution();
    Signature sig = evaluate(phi, witness);
    return {std::move(sig), std::move(witness)};
}

namespace {

bool popcount_then_lex(const MaxSigRecord& a, const MaxSigRecord& b) {
    auto ca = a.signature.count(), cb = b.signature.count();
    if (ca != cb) return ca > cb;
    return a.signature.to_string() < b.signature.to_string();
}

}  // namespace

EngineStats enumerate_max_exact(const XorCnf& phi, const RecordSink& sink, ExactOptions opts) {
    SignatureSpan span = signature_span(phi);
    const std::size_t rho = span.rank();
    if (rho > opts.rank_cap) {
        throw EngineRefusal("signature space rank " + std::to_string(rho) + " exceeds cap " +
                            std::to_string(opts.rank_cap));
    }

    std::vector<MaxSigRecord> all;
    all.reserve(std::size_t{1} << rho);
    Signature sig = span.base;
    Assignment alpha(phi.num_vars());
    all.push_back({sig, alpha});
    for (std::size_t step = 1; step < (std::size_t{1} << rho); ++step) {
        auto k = static_cast<std::size_t>(std::countr_zero(step));
        sig ^= span.deltas[k];
        alpha ^= span.generators[k];
        all.push_back({sig, alpha});
    }

    std::sort(all.begin(), all.end(), popcount_then_lex);
    std::vector<const MaxSigRecord*> accepted;
    for (const auto& rec : all) {
        bool dominated = std::any_of(accepted.begin(), accepted.end(),
                                     [&](const MaxSigRecord* a) { return rec.signature.leq(a->signature); });
        if (!dominated) accepted.push_back(&rec);
    }

    EngineStats stats;
    for (const auto* rec : accepted) {
        ++stats.emitted;
        if (!sink(*rec)) break;
    }
    return stats;
}

namespace {

BitVec coefficients(const XorClause& c, std::size_t n) {
    BitVec v(n);
    for (Var x : c.vars) v.set(x - 1);
    return v;
}

// Coordinates of coefficient vectors relative to a basis picked greedily
// from the rows fed to add(). Coordinates are bitmasks over basis slots.
class Coordinates {
public:
    explicit Coordinates(std::size_t n) : n_(n) {}

    // Returns the coordinate mask of v, or nullopt if v is outside the span.
    std::optional<std::uint64_t> locate(BitVec v) const {
        std::uint64_t e = 0;
        for (std::size_t i = 0; i < red_.size(); ++i) {
            if (v.test(pivot_[i])) {
                v ^= red_[i];
                e ^= expr_[i];
            }
        }
        if (v.any()) return std::nullopt;
        return e;
    }

    std::uint64_t add(const BitVec& raw) {
        BitVec v = raw;
        std::uint64_t e = 0;
        for (std::size_t i = 0; i < red_.size(); ++i) {
            if (v.test(pivot_[i])) {
                v ^= red_[i];
                e ^= expr_[i];
            }
        }
        if (v.none()) return e;
        const std::size_t slot = red_.size();
        if (slot >= 63) throw EngineRefusal("supergraph: row rank too large for coordinate masks");
        const std::uint64_t bit = std::uint64_t{1} << slot;
        const std::size_t p = v.find_first();
        for (std::size_t i = 0; i < red_.size(); ++i) {
            if (red_[i].test(p)) {
                red_[i] ^= v;
                expr_[i] ^= e ^ bit;
            }
        }
        red_.push_back(std::move(v));
        pivot_.push_back(p);
        expr_.push_back(e ^ bit);
        return bit;
    }

    std::size_t rank() const { return red_.size(); }

private:
    std::size_t n_;
    std::vector<BitVec> red_;
    std::vector<std::size_t> pivot_;
    std::vector<std::uint64_t> expr_;
};

// All maximal T within `ones` such that T plus r is feasible. `ones` must be
// a maximal feasible set, so r's coefficients lie in its span and T plus r is
// feasible exactly when r stays outside span(T). The maximal such T are the
// traces of hyperplanes f = 0 with f(c_r) = 1.
std::vector<IndexList> restricted_maxima(const XorCnf& phi, const IndexList& ones, ClauseIndex r,
                                         std::size_t rank_cap) {
    const std::size_t n = phi.num_vars();
    Coordinates coords(n);
    std::vector<std::uint64_t> at(ones.size());
    for (std::size_t i = 0; i < ones.size(); ++i) at[i] = coords.add(coefficients(phi[ones[i]], n));
    const std::size_t k = coords.rank();
    if (k > rank_cap) {
        throw EngineRefusal("supergraph: rank " + std::to_string(k) + " of a maximal set exceeds cap " +
                            std::to_string(rank_cap));
    }
    auto target = coords.locate(coefficients(phi[r], n));
    if (!target) throw ContractViolation("supergraph: clause outside the span of a maximal set");

    // T = {s : f(c_s) = 0} is maximal exactly when it spans ker f, that is
    // when its rank is k - 1. Such T determines f, so no two f repeat a T.
    std::vector<IndexList> out;
    std::vector<std::uint64_t> basis(k);
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << k); ++f) {
        if ((std::popcount(f & *target) & 1) == 0) continue;
        std::fill(basis.begin(), basis.end(), 0);
        std::size_t rank = 0;
        for (std::size_t i = 0; i < ones.size() && rank + 1 < k; ++i) {
            if (std::popcount(f & at[i]) & 1) continue;
            std::uint64_t v = at[i];
            while (v) {
                auto top = static_cast<std::size_t>(std::bit_width(v) - 1);
                if (!basis[top]) {
                    basis[top] = v;
                    ++rank;
                    break;
                }
                v ^= basis[top];
            }
        }
        if (rank + 1 != k) continue;
        IndexList seed{r};
        for (std::size_t i = 0; i < ones.size(); ++i) {
            if ((std::popcount(f & at[i]) & 1) == 0) seed.push_back(ones[i]);
        }
        out.push_back(std::move(seed));
    }
    return out;
}

}  // namespace

EngineStats enumerate_max_supergraph(const XorCnf& phi, const RecordSink& sink, SupergraphOptions opts) {
    const std::size_t m = phi.num_clauses();
    EngineStats stats;
    std::unordered_set<BitVec, BitVecHash> seen;
    std::deque<Signature> queue;

    auto offer = [&](MaxSigRecord rec) {
        if (!seen.insert(rec.signature).second) return true;
        ++stats.emitted;
        queue.push_back(rec.signature);
        return sink(rec);
    };

    ++stats.gc_calls;
    if (!offer(gc(phi, {}))) return stats;

    while (!queue.empty()) {
        Signature s = std::move(queue.front());
        queue.pop_front();
        const IndexList ones = s.one();
        for (ClauseIndex r : s.zero()) {
            // N1: r, then the clauses of s, then everything else.
            IndexList order1 = ones;
            for (std::size_t j = 0; j < m; ++j) {
                if (!s.test(j)) order1.push_back(j);
            }
            ++stats.gc_calls;
            if (!offer(gc(phi, {r}, order1))) return stats;

            // N2: r, then the clauses of s below r, then everything else ascending.
            IndexList order2;
            for (auto i : ones) {
                if (i < r) order2.push_back(i);
            }
            for (std::size_t j = 0; j < m; ++j) order2.push_back(j);
            ++stats.gc_calls;
            if (!offer(gc(phi, {r}, order2))) return stats;

            // N1 and N2 alone can strand solutions (the odd triangle never
            // reaches 011 from 110). Completing every maximal feasible part of
            // s plus r makes the solution graph strongly connected.
            for (const auto& seed : restricted_maxima(phi, ones, r, opts.rank_cap)) {
                ++stats.gc_calls;
                if (!offer(gc(phi, seed))) return stats;
            }
        }
    }
    return stats;
}

EngineStats enumerate_max(const XorCnf& phi, const RecordSink& sink, MaxEngine engine, ExactOptions opts) {
    switch (engine) {
        case MaxEngine::Exact: return enumerate_max_exact(phi, sink, opts);
        case MaxEngine::Supergraph: return enumerate_max_supergraph(phi, sink, SupergraphOptions{opts.rank_cap});
    }
    throw ContractViolation("unknown engine");
}

EngineStats enumerate_min(const XorCnf& phi, const RecordSink& sink, MaxEngine engine, ExactOptions opts) {
    return enumerate_max(
        inverse(phi),
        [&](const MaxSigRecord& rec) { return sink({rec.signature.complement(), rec.witness}); }, engine, opts);
}

}  // namespace xorsig
