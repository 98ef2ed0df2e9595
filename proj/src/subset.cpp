#include "sumlab/subset.hpp"

#include "sumlab/rng.hpp"

namespace sumlab {

void require_same_group(const GroupSubset& a, const GroupSubset& b, const char* op) {
    if (!a.group()->same_structure(*b.group()))
        throw InputError(std::string(op) + ": group mismatch (" + a.group()->to_string() +
                         " vs " + b.group()->to_string() + ")");
}

GroupSubset GroupSubset::from_elements(GroupPtr g, const std::vector<GroupElement>& elems) {
    GroupSubset s(g);
    for (const auto& e : elems) s.insert(g->index_of(e));
    return s;
}

GroupSubset GroupSubset::from_indices(GroupPtr g, const std::vector<std::uint64_t>& idx) {
    GroupSubset s(std::move(g));
    for (auto i : idx) {
        if (i >= s.group_->order()) throw InputError("subset: element index out of range");
        s.insert(i);
    }
    return s;
}

GroupSubset GroupSubset::full(GroupPtr g) {
    GroupSubset s(std::move(g));
    s.bits_.set_all();
    s.card_ = s.group_->order();
    return s;
}

GroupSubset GroupSubset::singleton_identity(GroupPtr g) {
    GroupSubset s(std::move(g));
    s.insert(0);
    return s;
}

GroupSubset GroupSubset::random(GroupPtr g, const Rat& density, std::uint64_t seed) {
    if (density.is_negative() || density > Rat(1))
        throw InputError("random subset: density must lie in [0,1]");
    GroupSubset s(std::move(g));
    if (density.is_zero()) return s;
    if (density == Rat(1)) return full(s.group_);
    std::uint64_t p = density.num().to_u64();
    std::uint64_t q = density.den().to_u64();
    Xoshiro256StarStar rng(seed);
    for (std::uint64_t i = 0; i < s.group_->order(); ++i) {
        if (rng.uniform_below(q) < p) s.insert(i);
    }
    return s;
}

GroupSubset GroupSubset::united(const GroupSubset& o) const {
    require_same_group(*this, o, "union");
    GroupSubset r = *this;
    r.bits_ |= o.bits_;
    r.card_ = r.bits_.popcount();
    return r;
}

GroupSubset GroupSubset::intersected(const GroupSubset& o) const {
    require_same_group(*this, o, "intersection");
    GroupSubset r = *this;
    r.bits_ &= o.bits_;
    r.card_ = r.bits_.popcount();
    return r;
}

GroupSubset GroupSubset::complemented() const {
    GroupSubset r = *this;
    r.bits_.flip_all();
    r.card_ = r.group_->order() - card_;
    return r;
}

void translate_bits_in_place(const FiniteAbelianGroup& g, BitVec& bits, std::uint64_t t,
                             BitVec& scratch) {
    // Adding digit c to coordinate i permutes indices within each
    // contiguous block of N_i * stride_i bits as a rotation by c * stride_i.
    for (std::size_t i = 0; i < g.factor_count(); ++i) {
        std::uint64_t stride = g.stride(i);
        std::uint64_t c = (t / stride) % g.factors()[i];
        if (c == 0) continue;
        std::uint64_t block = g.factors()[i] * stride;
        std::uint64_t shift = c * stride;
        for (std::uint64_t start = 0; start < g.order(); start += block) {
            bits.rotate_range(start, block, shift, scratch);
        }
    }
}

GroupSubset GroupSubset::translated(std::uint64_t t) const {
    GroupSubset r = *this;
    BitVec scratch;
    translate_bits_in_place(*group_, r.bits_, t, scratch);
    return r;
}

GroupSubset GroupSubset::negated() const {
    GroupSubset r(group_);
    bits_.for_each_set([&](std::uint64_t i) { r.bits_.set(group_->neg_index(i)); });
    r.card_ = card_;
    return r;
}

void GroupSubset::adopt_bits(BitVec b) {
    bits_ = std::move(b);
    card_ = bits_.popcount();
}

} // namespace sumlab
