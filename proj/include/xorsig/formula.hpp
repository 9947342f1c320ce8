#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xorsig/bitvec.hpp"

namespace xorsig {

using Var = std::size_t;          // 1-based variable id
using ClauseIndex = std::size_t;  // 0-based clause position
using IndexList = std::vector<ClauseIndex>;

// One XOR clause: the GF(2) equation sum(vars) = parity.
struct XorClause {
    std::vector<Var> vars;  // sorted, duplicate-free, 1-based
    bool parity = false;

    XorClause() = default;
    XorClause(std::vector<Var> v, bool eps);

    XorClause negated() const { return XorClause{vars, !parity}; }
    std::size_t width() const { return vars.size(); }

    friend bool operator==(const XorClause&, const XorClause&) = default;
    friend auto operator<=>(const XorClause&, const XorClause&) = default;
};

// Signature bit j corresponds to clause j (0-based internally).
class Signature : public BitVec {
public:
    using BitVec::BitVec;
    Signature() = default;
    explicit Signature(BitVec bits) : BitVec(std::move(bits)) {}
    static Signature from_string(std::string_view text) { return Signature(BitVec::from_string(text)); }

    IndexList one() const { return ones(); }
    IndexList zero() const;
    Signature complement() const {
        Signature s = *this;
        s.flip_all();
        return s;
    }
    // Bitwise partial order.
    bool leq(const Signature& other) const { return is_subset_of(other); }
};

// Truth assignment; bit i holds the value of variable i+1.
class Assignment : public BitVec {
public:
    using BitVec::BitVec;
    Assignment() = default;
    explicit Assignment(BitVec bits) : BitVec(std::move(bits)) {}
    static Assignment from_string(std::string_view text) { return Assignment(BitVec::from_string(text)); }

    bool value(Var v) const { return test(v - 1); }
};

class XorCnf {
public:
    XorCnf() = default;
    explicit XorCnf(std::size_t num_vars) : n_(num_vars) {}
    XorCnf(std::size_t num_vars, std::vector<XorClause> clauses);

    std::size_t num_vars() const { return n_; }
    std::size_t num_clauses() const { return clauses_.size(); }
    const std::vector<XorClause>& clauses() const { return clauses_; }
    const XorClause& operator[](ClauseIndex j) const { return clauses_[j]; }

    void add(XorClause clause);
    std::size_t max_width() const;

    friend bool operator==(const XorCnf&, const XorCnf&) = default;

private:
    std::size_t n_ = 0;
    std::vector<XorClause> clauses_;
};

// XNF: `p xnf <n> <m>` followed by m lines `x <lit>... 0`. A clause's parity is
// 1 + (number of negative literals) mod 2, i.e. the XOR of its literals is true.
XorCnf parse_xnf(std::istream& in);
XorCnf parse_xnf_string(std::string_view text);
void emit_xnf(std::ostream& out, const XorCnf& phi);
std::string emit_xnf_string(const XorCnf& phi);

// phi(A, B): clauses indexed by A as is and clauses indexed by B negated, in
// ascending index order, over the same variable set.
XorCnf restrict(const XorCnf& phi, const IndexList& keep, const IndexList& negate);

// Clause-wise parity flip.
XorCnf inverse(const XorCnf& phi);

Signature evaluate(const XorCnf& phi, const Assignment& alpha);

// What happened to an input clause during preprocessing.
struct RemapEntry {
    enum class Kind { Kept, DuplicateOf, Forced };
    Kind kind = Kind::Kept;
    ClauseIndex target = 0;  // core index (Kept) or original index of the twin (DuplicateOf)
    bool forced_bit = false;
};

class Remap {
public:
    Remap() = default;
    explicit Remap(std::vector<RemapEntry> entries);
    static Remap identity(std::size_t m);

    std::size_t original_size() const { return entries_.size(); }
    const std::vector<RemapEntry>& entries() const { return entries_; }
    const IndexList& kept() const { return kept_; }

    // Lifts a signature of the core formula to a signature of the original one.
    Signature expand(const Signature& core) const;

private:
    std::vector<RemapEntry> entries_;
    IndexList kept_;
};

enum class PreprocessMode {
    Dedup,              // remove duplicate (vars, parity) clauses only
    DedupIsolatedUnits  // also drop unit clauses on otherwise unused variables (forced to 1)
};

struct Preprocessed {
    XorCnf core;
    Remap remap;
};

Preprocessed preprocess(const XorCnf& phi, PreprocessMode mode = PreprocessMode::DedupIsolatedUnits);

}  // namespace xorsig
