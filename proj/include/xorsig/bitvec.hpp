#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace xorsig {

// Dense bit vector backed by 64-bit words. Bits past size() are always zero.
class BitVec {
public:
    using word_t = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, 0) {}

    // Parses a string of '0'/'1' characters; character i becomes bit i.
    static BitVec from_string(std::string_view text) {
        BitVec v(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1') v.set(i);
        }
        return v;
    }

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    bool operator[](std::size_t i) const { return test(i); }

    void set(std::size_t i) { words_[i / kWordBits] |= word_t{1} << (i % kWordBits); }
    void reset(std::size_t i) { words_[i / kWordBits] &= ~(word_t{1} << (i % kWordBits)); }
    void flip(std::size_t i) { words_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }
    void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    void flip_all() {
        for (auto& w : words_) w = ~w;
        trim();
    }

    BitVec& operator^=(const BitVec& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }
    BitVec& operator&=(const BitVec& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    BitVec& operator|=(const BitVec& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](word_t w) { return w == 0; });
    }
    bool any() const { return !none(); }

    // Parity of popcount(*this & other).
    bool dot(const BitVec& other) const {
        word_t acc = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
        return std::popcount(acc) & 1;
    }

    // Bitwise order: every set bit of *this is set in other.
    bool is_subset_of(const BitVec& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~other.words_[i]) return false;
        }
        return true;
    }

    bool intersects(const BitVec& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & other.words_[i]) return true;
        }
        return false;
    }

    // Index of the lowest set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const {
        if (from >= nbits_) return nbits_;
        std::size_t wi = from / kWordBits;
        word_t w = words_[wi] & (~word_t{0} << (from % kWordBits));
        while (true) {
            if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return nbits_;
            w = words_[wi];
        }
    }
    std::size_t find_first() const { return find_next(0); }

    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t i = find_first(); i < nbits_; i = find_next(i + 1)) out.push_back(i);
        return out;
    }

    std::string to_string() const {
        std::string s(nbits_, '0');
        for (std::size_t i = find_first(); i < nbits_; i = find_next(i + 1)) s[i] = '1';
        return s;
    }

    const std::vector<word_t>& words() const { return words_; }

    friend bool operator==(const BitVec&, const BitVec&) = default;

    // Lexicographic over bit positions 0,1,... with 0 < 1; shorter vectors first.
    friend bool operator<(const BitVec& a, const BitVec& b) {
        if (a.nbits_ != b.nbits_) return a.nbits_ < b.nbits_;
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            word_t diff = a.words_[i] ^ b.words_[i];
            if (diff != 0) {
                word_t low = diff & (~diff + 1);
                return (b.words_[i] & low) != 0;
            }
        }
        return false;
    }

    std::size_t hash() const {
        std::size_t h = nbits_ * 0x9e3779b97f4a7c15ull;
        for (auto w : words_) h = (h ^ std::hash<word_t>{}(w)) * 0x100000001b3ull;
        return h;
    }

private:
    void trim() {
        if (nbits_ % kWordBits != 0 && !words_.empty()) {
            words_.back() &= (word_t{1} << (nbits_ % kWordBits)) - 1;
        }
    }

    std::size_t nbits_ = 0;
    std::vector<word_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

}  // namespace xorsig
