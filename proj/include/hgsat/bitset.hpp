#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace hgsat {

/// Fixed-capacity bitset sized at construction. Backs every neighbor set;
/// word-parallel intersection is the hot path of the clique search.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : w_) w = 0; }

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

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset& o) const = default;

    /// Index of the first set bit at position >= from, or -1.
    int next(int from) const {
        if (from >= nbits_) return -1;
        int wi = from >> 6;
        std::uint64_t w = w_[wi] >> (from & 63);
        if (w) return from + std::countr_zero(w);
        for (wi += 1; wi < static_cast<int>(w_.size()); ++wi)
            if (w_[wi]) return (wi << 6) + std::countr_zero(w_[wi]);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace hgsat
