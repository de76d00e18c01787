#ifndef TREESQ_BITSET_HPP
#define TREESQ_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace treesq {

// Fixed-width dynamic bitset. Binary operations require equal widths.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_(static_cast<size_t>((nbits + 63) / 64), 0) {}

    int size() const { return nbits_; }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[static_cast<size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[static_cast<size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (std::uint64_t x : w_)
            if (x) return true;
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
    // Set difference.
    Bitset& operator-=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

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

    // Index of the lowest set bit, or -1.
    int find_first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }
    // Index of the lowest set bit above prev, or -1.
    int find_next(int prev) const {
        int i = prev + 1;
        if (i >= nbits_) return -1;
        size_t word = static_cast<size_t>(i >> 6);
        std::uint64_t cur = w_[word] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (cur) return static_cast<int>(word * 64) + std::countr_zero(cur);
            if (++word >= w_.size()) return -1;
            cur = w_[word];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (int v = find_first(); v >= 0; v = find_next(v)) out.push_back(v);
        return out;
    }

    bool operator==(const Bitset&) const = default;

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace treesq

#endif
