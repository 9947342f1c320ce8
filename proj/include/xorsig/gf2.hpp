#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "xorsig/bitvec.hpp"
#include "xorsig/formula.hpp"

namespace xorsig {

enum class PushResult { Feasible, Conflict };

// Incremental reduced row-echelon form over GF(2) for an XOR system on n
// variables. Column i-1 holds variable i, column n the right-hand side.
// Pivots are always the lowest coefficient column of their row, so the
// echelon form of a given row space does not depend on insertion order.
class EchelonState {
public:
    struct Checkpoint {
        std::size_t rows;
        std::size_t log;
        bool conflict;
    };

    explicit EchelonState(std::size_t num_vars);

    PushResult push_row(const XorClause& clause);
    PushResult push_row(BitVec row);

    // Pushes a trial row and undoes it again; the state is unchanged.
    bool would_conflict(const XorClause& clause);

    Checkpoint checkpoint() const { return {rows_.size(), undo_.size(), conflict_}; }
    void rollback(const Checkpoint& cp);

    bool conflict() const { return conflict_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t num_vars() const { return n_; }
    const std::vector<BitVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivot_col_; }

    // Free variables set to 0, pivots back-substituted. Requires !conflict().
    Assignment solution() const;

    // Row encoding of a clause in this state's column layout.
    BitVec encode(const XorClause& clause) const;

private:
    std::size_t n_;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivot_col_;
    // Rows modified by elimination, each XORed with the row that was the
    // newest at the time; undo replays the same XOR.
    struct UndoEntry {
        std::size_t row;
        std::size_t source;
    };
    std::vector<UndoEntry> undo_;
    bool conflict_ = false;
};

bool satisfiable(const XorCnf& phi);

// Deterministic witness: free variables 0, pivot variables back-substituted.
std::optional<Assignment> solve(const XorCnf& phi);

// Affine image of the signature map: every signature equals base XOR a
// subset-XOR of deltas, and each subset gives a distinct signature.
struct SignatureSpan {
    Signature base;                     // signature of the all-zero assignment
    std::vector<BitVec> deltas;         // independent, size = rank
    std::vector<Assignment> generators; // generators[k] flips exactly deltas[k]
    std::size_t rank() const { return deltas.size(); }
};

SignatureSpan signature_span(const XorCnf& phi);

}  // namespace xorsig
