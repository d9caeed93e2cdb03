#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace snc {

// Dynamic bitset over 64-bit words, used as the vertex-set representation
// everywhere. Iteration is always in ascending bit order so every set-valued
// result is deterministic. Bits at positions >= size() stay zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_(words_for(n), 0) {}

    int size() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // *this &= ~o
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset& o) const = default;

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    static int and_count(const Bitset& a, const Bitset& b) {
        int c = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            c += std::popcount(a.w_[i] & b.w_[i]);
        return c;
    }

    // First set bit at position >= from, or -1.
    int next(int from) const {
        if (from >= n_) return -1;
        std::size_t k = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = w_[k] >> (from & 63);
        if (w) return from + std::countr_zero(w);
        for (++k; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k << 6) + std::countr_zero(w_[k]);
        return -1;
    }
    int first() const { return next(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

private:
    static std::size_t words_for(int n) {
        if (n < 0) throw std::invalid_argument("Bitset: negative size");
        return (static_cast<std::size_t>(n) + 63) / 64;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Convenience: iterate "for (int v : bits(s)) ..." in ascending order.
class BitsetRange {
public:
    explicit BitsetRange(const Bitset& s) : s_(s) {}
    class iterator {
    public:
        iterator(const Bitset* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = s_->next(v_ + 1);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }

    private:
        const Bitset* s_;
        int v_;
    };
    iterator begin() const { return {&s_, s_.first()}; }
    iterator end() const { return {&s_, -1}; }

private:
    const Bitset& s_;
};

inline BitsetRange bits(const Bitset& s) { return BitsetRange(s); }
// Iterating a temporary would dangle; bind it to a named variable instead.
BitsetRange bits(const Bitset&& s) = delete;

}  // namespace snc
