#include "xorsig/flashlight.hpp"

#include <algorithm>

#include "xorsig/gf2.hpp"

namespace xorsig {

bool extendable(const XorCnf& phi, const IndexList& ones, const IndexList& zeros) {
    return satisfiable(restrict(phi, ones, zeros));
}

namespace {

class Flashlight {
public:
    Flashlight(const XorCnf& phi, const SignatureSink& sink)
        : phi_(phi), sink_(sink), state_(phi.num_vars()), current_(phi.num_clauses()) {}

    FlashlightStats run() {
        descend(0);
        return stats_;
    }

private:
    // Returns false once the sink asked to stop.
    bool descend(std::size_t depth) {
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (depth == phi_.num_clauses()) {
            ++stats_.emitted;
            return sink_(current_);
        }
        const XorClause& clause = phi_[depth];
        for (bool bit : {true, false}) {
            auto cp = state_.checkpoint();
            ++stats_.oracle_calls;
            bool ok = state_.push_row(bit ? clause : clause.negated()) == PushResult::Feasible;
            if (ok) {
                current_.assign(depth, bit);
                if (!descend(depth + 1)) {
                    state_.rollback(cp);
                    return false;
                }
            }
            state_.rollback(cp);
        }
        current_.reset(depth);
        return true;
    }

    const XorCnf& phi_;
    const SignatureSink& sink_;
    EchelonState state_;
    Signature current_;
    FlashlightStats stats_;
};

}  // namespace

FlashlightStats enumerate_all(const XorCnf& phi, const SignatureSink& sink) {
    return Flashlight(phi, sink).run();
}

}  // namespace xorsig
