#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace bturan {

// Fixed-size dynamic bitset used for adjacency rows and vertex sets.
// All binary operations require both operands to have the same size.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this \ o
    Bitset& subtract(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    int and_count(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // Lowest set bit, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }
    // Lowest set bit strictly greater than i, or -1.
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        size_t k = size_t(i) >> 6;
        uint64_t w = w_[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(k * 64) + std::countr_zero(w);
            if (++k == w_.size()) return -1;
            w = w_[k];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                f(int(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    static Bitset of(int nbits, const std::vector<int>& elems) {
        Bitset b(nbits);
        for (int e : elems) b.set(e);
        return b;
    }
    static Bitset full(int nbits) {
        Bitset b(nbits);
        for (int i = 0; i < nbits; ++i) b.set(i);
        return b;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace bturan
