#pragma once

#include <cstddef>
#include <functional>

#include "xorsig/formula.hpp"

namespace xorsig {

// Receives each signature as soon as it is found. Returning false stops the enumeration.
using SignatureSink = std::function<bool(const Signature&)>;

// Is there a signature with ones on `ones` and zeros on `zeros`?
bool extendable(const XorCnf& phi, const IndexList& ones, const IndexList& zeros);

struct FlashlightStats {
    std::size_t emitted = 0;
    std::size_t oracle_calls = 0;  // extension tests performed
    std::size_t max_depth = 0;     // deepest recursion level reached
};

// Lists every signature of phi exactly once: depth-first over clause
// positions 0..m-1, 1-branch first, each branch guarded by an incremental
// extension test. Never stores more than the current path.
FlashlightStats enumerate_all(const XorCnf& phi, const SignatureSink& sink);

}  // namespace xorsig
