#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace xorsig {

// Union-find that also tracks, for every element, the parity of its side
// relative to the root of its set. Union by size, no path compression.
class ParityDsu {
public:
    explicit ParityDsu(std::size_t n) : parent_(n), parity_(n, 0), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t size() const { return parent_.size(); }

    // Root of x and the parity of x relative to it.
    std::pair<std::size_t, bool> find(std::size_t x) const {
        bool p = false;
        while (parent_[x] != x) {
            p ^= parity_[x] != 0;
            x = parent_[x];
        }
        return {x, p};
    }

    bool connected(std::size_t a, std::size_t b) const { return find(a).first == find(b).first; }

    // Would requiring side(a) XOR side(b) == differ contradict earlier constraints?
    bool consistent(std::size_t a, std::size_t b, bool differ) const {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        return ra != rb || (pa ^ pb) == differ;
    }

    // Records the constraint; returns false (and changes nothing) on contradiction.
    bool unite(std::size_t a, std::size_t b, bool differ) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == differ;
        if (size_[ra] < size_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        parity_[rb] = static_cast<unsigned char>(pa ^ pb ^ differ);
        size_[ra] += size_[rb];
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned char> parity_;
    std::vector<std::size_t> size_;
};

}  // namespace xorsig
