#include "xorsig/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "xorsig/error.hpp"

namespace xorsig::oracle {

void sort_canonical(std::vector<Signature>& sigs) {
    std::sort(sigs.begin(), sigs.end(), [](const Signature& a, const Signature& b) {
        auto ca = a.count(), cb = b.count();
        if (ca != cb) return ca > cb;
        return a.to_string() < b.to_string();
    });
}

std::vector<Signature> brute_all(const XorCnf& phi, std::size_t var_cap) {
    const std::size_t n = phi.num_vars();
    const std::size_t m = phi.num_clauses();
    if (n > var_cap) {
        throw EngineRefusal("brute force over " + std::to_string(n) + " variables exceeds cap " +
                            std::to_string(var_cap));
    }
    // Flipping variable v toggles exactly the clauses that contain it.
    std::vector<BitVec> toggles(n, BitVec(m));
    Signature sig(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (Var v : phi[j].vars) toggles[v - 1].set(j);
        if (!phi[j].parity) sig.set(j);  // all-zero assignment satisfies even clauses
    }

    std::unordered_set<BitVec, BitVecHash> seen;
    seen.insert(sig);
    for (std::size_t step = 1; step < (std::size_t{1} << n); ++step) {
        sig ^= toggles[static_cast<std::size_t>(std::countr_zero(step))];
        seen.insert(sig);
    }
    std::vector<Signature> out;
    out.reserve(seen.size());
    for (const auto& s : seen) out.emplace_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Signature> maximal_filter(std::vector<Signature> set) {
    sort_canonical(set);
    set.erase(std::unique(set.begin(), set.end()), set.end());
    std::vector<Signature> out;
    for (auto& s : set) {
        bool dominated = std::any_of(out.begin(), out.end(), [&](const Signature& t) { return s.leq(t); });
        if (!dominated) out.push_back(std::move(s));
    }
    return out;
}

std::vector<Signature> brute_max(const XorCnf& phi, std::size_t var_cap) {
    return maximal_filter(brute_all(phi, var_cap));
}

std::vector<Signature> brute_min(const XorCnf& phi, std::size_t var_cap) {
    auto all = brute_all(phi, var_cap);
    for (auto& s : all) s = s.complement();
    auto maxima = maximal_filter(std::move(all));
    for (auto& s : maxima) s = s.complement();
    sort_canonical(maxima);
    return maxima;
}

}  // namespace xorsig::oracle
