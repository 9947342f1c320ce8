#include "xorsig/formula.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "xorsig/error.hpp"

namespace xorsig {

XorClause::XorClause(std::vector<Var> v, bool eps) : vars(std::move(v)), parity(eps) {
    if (vars.empty()) throw ContractViolation("XOR clause must contain at least one variable");
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
        throw ContractViolation("XOR clause repeats a variable");
    }
    if (vars.front() == 0) throw ContractViolation("variable ids are 1-based");
}

IndexList Signature::zero() const {
    IndexList out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (!test(i)) out.push_back(i);
    }
    return out;
}

XorCnf::XorCnf(std::size_t num_vars, std::vector<XorClause> clauses) : n_(num_vars) {
    clauses_.reserve(clauses.size());
    for (auto& c : clauses) add(std::move(c));
}

void XorCnf::add(XorClause clause) {
    if (clause.vars.empty() || clause.vars.back() > n_) {
        throw ContractViolation("clause variable out of range 1.." + std::to_string(n_));
    }
    clauses_.push_back(std::move(clause));
}

std::size_t XorCnf::max_width() const {
    std::size_t w = 0;
    for (const auto& c : clauses_) w = std::max(w, c.width());
    return w;
}

namespace {

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

XorCnf parse_xnf(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> n, m;
    std::vector<XorClause> clauses;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n) throw ParseError(lineno, "duplicate header");
            std::string fmt;
            long long nv = -1, nc = -1;
            if (!(ls >> fmt >> nv >> nc) || fmt != "xnf" || nv < 0 || nc < 0) {
                throw ParseError(lineno, "malformed header, expected 'p xnf <vars> <clauses>'");
            }
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
            n = static_cast<std::size_t>(nv);
            m = static_cast<std::size_t>(nc);
            continue;
        }
        if (!n) throw ParseError(lineno, "clause before 'p xnf' header");
        if (tag != "x") throw ParseError(lineno, "expected clause line starting with 'x'");

        std::vector<Var> vars;
        std::size_t negatives = 0;
        bool terminated = false;
        std::string tok;
        while (ls >> tok) {
            if (terminated) throw ParseError(lineno, "tokens after terminating 0");
            long long lit = 0;
            std::size_t pos = 0;
            try {
                lit = std::stoll(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError(lineno, "invalid literal '" + tok + "'");
            }
            if (pos != tok.size()) throw ParseError(lineno, "invalid literal '" + tok + "'");
            if (lit == 0) {
                terminated = true;
                continue;
            }
            auto v = static_cast<Var>(lit < 0 ? -lit : lit);
            if (v > *n) {
                throw ParseError(lineno, "variable " + std::to_string(v) + " out of range 1.." + std::to_string(*n));
            }
            if (lit < 0) ++negatives;
            vars.push_back(v);
        }
        if (!terminated) throw ParseError(lineno, "clause not terminated by 0");
        if (vars.empty()) throw ParseError(lineno, "empty clause");
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
            throw ParseError(lineno, "repeated variable in clause");
        }
        clauses.emplace_back(std::move(vars), (1 + negatives) % 2 == 1);
    }
    if (!n) throw ParseError(lineno, "missing 'p xnf' header");
    if (clauses.size() != *m) {
        throw ParseError(lineno, "header declares " + std::to_string(*m) + " clauses, found " +
                                     std::to_string(clauses.size()));
    }
    return XorCnf(*n, std::move(clauses));
}

XorCnf parse_xnf_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_xnf(in);
}

void emit_xnf(std::ostream& out, const XorCnf& phi) {
    out << "p xnf " << phi.num_vars() << ' ' << phi.num_clauses() << '\n';
    for (const auto& c : phi.clauses()) {
        out << 'x';
        // An odd clause is written with all positive literals, an even one
        // negates its first variable.
        for (std::size_t i = 0; i < c.vars.size(); ++i) {
            bool neg = !c.parity && i == 0;
            out << ' ' << (neg ? "-" : "") << c.vars[i];
        }
        out << " 0\n";
    }
}

std::string emit_xnf_string(const XorCnf& phi) {
    std::ostringstream out;
    emit_xnf(out, phi);
    return out.str();
}

XorCnf restrict(const XorCnf& phi, const IndexList& keep, const IndexList& negate) {
    const std::size_t m = phi.num_clauses();
    std::vector<signed char> role(m, 0);
    for (auto i : keep) {
        if (i >= m) throw ContractViolation("restrict: index out of range");
        role[i] = 1;
    }
    for (auto j : negate) {
        if (j >= m) throw ContractViolation("restrict: index out of range");
        if (role[j] == 1) throw ContractViolation("restrict: A and B overlap");
        role[j] = -1;
    }
    XorCnf out(phi.num_vars());
    for (std::size_t j = 0; j < m; ++j) {
        if (role[j] == 1) out.add(phi[j]);
        if (role[j] == -1) out.add(phi[j].negated());
    }
    return out;
}

XorCnf inverse(const XorCnf& phi) {
    XorCnf out(phi.num_vars());
    for (const auto& c : phi.clauses()) out.add(c.negated());
    return out;
}

Signature evaluate(const XorCnf& phi, const Assignment& alpha) {
    if (alpha.size() != phi.num_vars()) {
        throw ContractViolation("evaluate: assignment has " + std::to_string(alpha.size()) + " bits, formula has " +
                                std::to_string(phi.num_vars()) + " variables");
    }
    Signature sig(phi.num_clauses());
    for (std::size_t j = 0; j < phi.num_clauses(); ++j) {
        bool sum = false;
        for (Var v : phi[j].vars) sum ^= alpha.value(v);
        if (sum == phi[j].parity) sig.set(j);
    }
    return sig;
}

Remap::Remap(std::vector<RemapEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        if (entries_[j].kind == RemapEntry::Kind::Kept) kept_.push_back(j);
    }
}

Remap Remap::identity(std::size_t m) {
    std::vector<RemapEntry> e(m);
    for (std::size_t j = 0; j < m; ++j) e[j] = {RemapEntry::Kind::Kept, j, false};
    return Remap(std::move(e));
}

Signature Remap::expand(const Signature& core) const {
    if (core.size() != kept_.size()) throw ContractViolation("Remap::expand: core signature length mismatch");
    Signature out(entries_.size());
    // Twins always point to an earlier kept index, so one forward pass suffices.
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        const auto& e = entries_[j];
        switch (e.kind) {
            case RemapEntry::Kind::Kept: out.assign(j, core.test(e.target)); break;
            case RemapEntry::Kind::DuplicateOf: out.assign(j, out.test(e.target)); break;
            case RemapEntry::Kind::Forced: out.assign(j, e.forced_bit); break;
        }
    }
    return out;
}

Preprocessed preprocess(const XorCnf& phi, PreprocessMode mode) {
    const std::size_t m = phi.num_clauses();
    std::vector<RemapEntry> entries(m);
    std::map<XorClause, ClauseIndex> first_seen;
    std::vector<ClauseIndex> survivors;
    for (std::size_t j = 0; j < m; ++j) {
        auto [it, inserted] = first_seen.emplace(phi[j], j);
        if (inserted) {
            survivors.push_back(j);
        } else {
            entries[j] = {RemapEntry::Kind::DuplicateOf, it->second, false};
        }
    }

    if (mode == PreprocessMode::DedupIsolatedUnits) {
        std::vector<std::size_t> occurrences(phi.num_vars() + 1, 0);
        for (auto j : survivors) {
            for (Var v : phi[j].vars) ++occurrences[v];
        }
        std::vector<ClauseIndex> remaining;
        for (auto j : survivors) {
            if (phi[j].width() == 1 && occurrences[phi[j].vars[0]] == 1) {
                entries[j] = {RemapEntry::Kind::Forced, 0, true};
            } else {
                remaining.push_back(j);
            }
        }
        survivors = std::move(remaining);
    }

    XorCnf core(phi.num_vars());
    for (std::size_t k = 0; k < survivors.size(); ++k) {
        core.add(phi[survivors[k]]);
        entries[survivors[k]] = {RemapEntry::Kind::Kept, k, false};
    }
    return {std::move(core), Remap(std::move(entries))};
}

}  // namespace xorsig
