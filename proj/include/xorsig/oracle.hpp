#pragma once

#include <cstddef>
#include <vector>

#include "xorsig/formula.hpp"

// Brute-force ground truth. Exponential in the number of variables; meant for
// tests, benchmarks and the `--engine brute` flag.
namespace xorsig::oracle {

inline constexpr std::size_t kDefaultVarCap = 20;

// Distinct signatures over all 2^n assignments, sorted lexicographically.
std::vector<Signature> brute_all(const XorCnf& phi, std::size_t var_cap = kDefaultVarCap);
std::vector<Signature> brute_max(const XorCnf& phi, std::size_t var_cap = kDefaultVarCap);
std::vector<Signature> brute_min(const XorCnf& phi, std::size_t var_cap = kDefaultVarCap);

// Elements not strictly below another one; popcount descending, then lexicographic.
std::vector<Signature> maximal_filter(std::vector<Signature> set);

// popcount descending, then lexicographic: the canonical order of maximal-set outputs.
void sort_canonical(std::vector<Signature>& sigs);

}  // namespace xorsig::oracle
