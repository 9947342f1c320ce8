#include "xorsig/gf2.hpp"

#include "xorsig/error.hpp"

namespace xorsig {

EchelonState::EchelonState(std::size_t num_vars) : n_(num_vars) {}

BitVec EchelonState::encode(const XorClause& clause) const {
    BitVec row(n_ + 1);
    for (Var v : clause.vars) {
        if (v == 0 || v > n_) throw ContractViolation("push_row: variable out of range");
        row.set(v - 1);
    }
    if (clause.parity) row.set(n_);
    return row;
}

PushResult EchelonState::push_row(const XorClause& clause) { return push_row(encode(clause)); }

PushResult EchelonState::push_row(BitVec row) {
    if (conflict_) throw ContractViolation("push_row after conflict without rollback");
    if (row.size() != n_ + 1) throw ContractViolation("push_row: row width mismatch");

    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (row.test(pivot_col_[r])) row ^= rows_[r];
    }
    std::size_t pivot = row.find_first();
    if (pivot >= n_) {
        if (pivot == n_) {
            conflict_ = true;
            return PushResult::Conflict;
        }
        return PushResult::Feasible;  // redundant 0 = 0
    }

    const std::size_t source = rows_.size();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].test(pivot)) {
            rows_[r] ^= row;
            undo_.push_back({r, source});
        }
    }
    rows_.push_back(std::move(row));
    pivot_col_.push_back(pivot);
    return PushResult::Feasible;
}

bool EchelonState::would_conflict(const XorClause& clause) {
    auto cp = checkpoint();
    bool bad = push_row(clause) == PushResult::Conflict;
    rollback(cp);
    return bad;
}

void EchelonState::rollback(const Checkpoint& cp) {
    if (cp.rows > rows_.size() || cp.log > undo_.size()) {
        throw ContractViolation("rollback to a checkpoint that is no longer valid");
    }
    while (undo_.size() > cp.log) {
        const auto e = undo_.back();
        undo_.pop_back();
        rows_[e.row] ^= rows_[e.source];
    }
    rows_.resize(cp.rows);
    pivot_col_.resize(cp.rows);
    conflict_ = cp.conflict;
}

Assignment EchelonState::solution() const {
    if (conflict_) throw ContractViolation("solution requested from an inconsistent system");
    Assignment alpha(n_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        // Fully reduced rows contain their pivot and free columns only.
        if (rows_[r].test(n_)) alpha.set(pivot_col_[r]);
    }
    return alpha;
}

bool satisfiable(const XorCnf& phi) {
    EchelonState st(phi.num_vars());
    for (const auto& c : phi.clauses()) {
        if (st.push_row(c) == PushResult::Conflict) return false;
    }
    return true;
}

std::optional<Assignment> solve(const XorCnf& phi) {
    EchelonState st(phi.num_vars());
    for (const auto& c : phi.clauses()) {
        if (st.push_row(c) == PushResult::Conflict) return std::nullopt;
    }
    return st.solution();
}

SignatureSpan signature_span(const XorCnf& phi) {
    const std::size_t n = phi.num_vars();
    const std::size_t m = phi.num_clauses();

    SignatureSpan span;
    span.base = evaluate(phi, Assignment(n));

    // Column of variable v in the coefficient matrix, as an m-bit vector.
    std::vector<BitVec> columns(n, BitVec(m));
    for (std::size_t j = 0; j < m; ++j) {
        for (Var v : phi[j].vars) columns[v - 1].set(j);
    }

    // Column echelon form, tracking which variables combine into each basis vector.
    std::vector<BitVec> basis;
    std::vector<std::size_t> lead;
    std::vector<Assignment> combo;
    for (std::size_t v = 0; v < n; ++v) {
        BitVec col = columns[v];
        Assignment mix(n);
        mix.set(v);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (col.test(lead[k])) {
                col ^= basis[k];
                mix ^= combo[k];
            }
        }
        std::size_t l = col.find_first();
        if (l == col.size()) continue;
        basis.push_back(std::move(col));
        lead.push_back(l);
        combo.push_back(std::move(mix));
    }
    span.deltas = std::move(basis);
    span.generators = std::move(combo);
    return span;
}

}  // namespace xorsig
