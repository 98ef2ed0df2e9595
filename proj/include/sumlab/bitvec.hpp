#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sumlab {

/// Dense bit vector sized in bits, 64-bit word storage. Bits beyond
/// size() are kept zero by every operation (the tail mask invariant).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::uint64_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::uint64_t size() const { return nbits_; }
    std::size_t word_count() const { return w_.size(); }
    std::uint64_t word(std::size_t i) const { return w_[i]; }

    bool get(std::uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::uint64_t i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(std::uint64_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    void set_all() {
        std::fill(w_.begin(), w_.end(), ~0ULL);
        mask_tail();
    }

    std::uint64_t popcount() const {
        std::uint64_t c = 0;
        for (auto w : w_) c += static_cast<std::uint64_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }

    BitVec& operator|=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    void flip_all() {
        for (auto& w : w_) w = ~w;
        mask_tail();
    }

    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    /// True if *this contains o (o subset of *this), same size assumed.
    bool contains_all(const BitVec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (o.w_[i] & ~w_[i]) return false;
        return true;
    }

    /// Set-lexicographic order on equal-size vectors: at the lowest index
    /// where the two differ, the vector holding a 1 is the smaller
    /// (its first distinct element is smaller as a sorted list).
    static bool lex_less(const BitVec& a, const BitVec& b) {
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            std::uint64_t d = a.w_[i] ^ b.w_[i];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return (a.w_[i] & low) != 0;
            }
        }
        return false;
    }

    /// Calls f(index) for every set bit in ascending order.
    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<std::uint64_t>(wi) * 64 + static_cast<std::uint64_t>(b));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint64_t> set_indices() const {
        std::vector<std::uint64_t> out;
        out.reserve(popcount());
        for_each_set([&](std::uint64_t i) { out.push_back(i); });
        return out;
    }

    /// Copies len bits from src starting at src_off into *this at dst_off.
    /// Ranges must lie inside the respective vectors; src may not alias this.
    void copy_bits_from(const BitVec& src, std::uint64_t src_off, std::uint64_t dst_off,
                        std::uint64_t len);

    /// Rotates bits [first, first+len) so that old position i moves to
    /// first + ((i - first + shift) mod len). Uses scratch storage of len bits.
    void rotate_range(std::uint64_t first, std::uint64_t len, std::uint64_t shift,
                      BitVec& scratch);

private:
    void mask_tail() {
        if (nbits_ & 63) w_.back() &= (1ULL << (nbits_ & 63)) - 1;
    }
    std::uint64_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace sumlab
