#pragma once

#include "sumlab/bitvec.hpp"
#include "sumlab/group.hpp"
#include "sumlab/rational.hpp"

#include <cstdint>
#include <vector>

namespace sumlab {

/// Dense subset of a finite abelian group with exact rational measure
/// |S| / |G|. Construction is single-threaded; reads are concurrent.
class GroupSubset {
public:
    /// Unbound placeholder (no group); assign a real subset before use.
    GroupSubset() = default;
    explicit GroupSubset(GroupPtr g) : group_(std::move(g)), bits_(group_->order()) {}

    static GroupSubset from_elements(GroupPtr g, const std::vector<GroupElement>& elems);
    static GroupSubset from_indices(GroupPtr g, const std::vector<std::uint64_t>& idx);
    static GroupSubset full(GroupPtr g);
    static GroupSubset singleton_identity(GroupPtr g);

    /// Includes each element independently with exact probability
    /// density = p/q, deterministic in the seed (xoshiro256**, one
    /// uniform draw in [0,q) per element in index order).
    static GroupSubset random(GroupPtr g, const Rat& density, std::uint64_t seed);

    const GroupPtr& group() const { return group_; }
    const BitVec& bits() const { return bits_; }
    std::uint64_t cardinality() const { return card_; }
    bool empty() const { return card_ == 0; }
    Rat measure() const { return Rat(Int(card_), Int(group_->order())); }

    bool contains(std::uint64_t index) const { return bits_.get(index); }
    bool contains(const GroupElement& e) const { return bits_.get(group_->index_of(e)); }

    void insert(std::uint64_t index) {
        if (!bits_.get(index)) { bits_.set(index); ++card_; }
    }
    void erase(std::uint64_t index) {
        if (bits_.get(index)) { bits_.reset(index); --card_; }
    }

    std::vector<std::uint64_t> indices() const { return bits_.set_indices(); }

    GroupSubset united(const GroupSubset& o) const;
    GroupSubset intersected(const GroupSubset& o) const;
    GroupSubset complemented() const;

    /// { s + t : s in S } for a fixed t, via per-axis bit-block rotation.
    GroupSubset translated(std::uint64_t t) const;
    /// { -s : s in S } via the group's negation index remap.
    GroupSubset negated() const;

    bool operator==(const GroupSubset& o) const {
        return group_->same_structure(*o.group_) && bits_ == o.bits_;
    }
    bool is_subset_of(const GroupSubset& o) const { return o.bits_.contains_all(bits_); }

    /// Internal: replaces the bit storage wholesale (card recomputed).
    void adopt_bits(BitVec b);

private:
    GroupPtr group_;
    BitVec bits_;
    std::uint64_t card_ = 0;
};

/// Applies the translation-by-t permutation to raw bits in place:
/// per axis i with digit c, rotates each contiguous block of
/// N_i * stride_i bits by c * stride_i. scratch is reused storage.
void translate_bits_in_place(const FiniteAbelianGroup& g, BitVec& bits, std::uint64_t t,
                             BitVec& scratch);

void require_same_group(const GroupSubset& a, const GroupSubset& b, const char* op);

} // namespace sumlab
