#include "doctest.h"

#include "sumlab/rng.hpp"
#include "sumlab/subset.hpp"

using namespace sumlab;

namespace {

GroupSubset naive_translate(const GroupSubset& s, std::uint64_t t) {
    GroupSubset out(s.group());
    s.bits().for_each_set(
        [&](std::uint64_t i) { out.insert(s.group()->add_indices(i, t)); });
    return out;
}

} // namespace

TEST_CASE("bit-range copy and rotate match naive bit loops") {
    Xoshiro256StarStar rng(271);
    for (int iter = 0; iter < 200; ++iter) {
        std::uint64_t nbits = 1 + rng.uniform_below(300);
        BitVec v(nbits);
        for (std::uint64_t i = 0; i < nbits; ++i)
            if (rng.next() & 1) v.set(i);

        std::uint64_t len = 1 + rng.uniform_below(nbits);
        std::uint64_t first = rng.uniform_below(nbits - len + 1);
        std::uint64_t shift = rng.uniform_below(2 * len);

        std::vector<bool> ref(nbits);
        for (std::uint64_t i = 0; i < nbits; ++i) ref[i] = v.get(i);
        for (std::uint64_t i = 0; i < len; ++i)
            ref[first + (i + shift) % len] = v.get(first + i);

        BitVec scratch;
        v.rotate_range(first, len, shift, scratch);
        for (std::uint64_t i = 0; i < nbits; ++i) CHECK(v.get(i) == ref[i]);
    }

    for (int iter = 0; iter < 200; ++iter) {
        std::uint64_t nsrc = 1 + rng.uniform_below(200);
        std::uint64_t ndst = 1 + rng.uniform_below(200);
        BitVec src(nsrc), dst(ndst);
        for (std::uint64_t i = 0; i < nsrc; ++i)
            if (rng.next() & 1) src.set(i);
        for (std::uint64_t i = 0; i < ndst; ++i)
            if (rng.next() & 1) dst.set(i);
        std::uint64_t len = rng.uniform_below(std::min(nsrc, ndst) + 1);
        if (len == 0) continue;
        std::uint64_t soff = rng.uniform_below(nsrc - len + 1);
        std::uint64_t doff = rng.uniform_below(ndst - len + 1);

        std::vector<bool> ref(ndst);
        for (std::uint64_t i = 0; i < ndst; ++i) ref[i] = dst.get(i);
        for (std::uint64_t i = 0; i < len; ++i) ref[doff + i] = src.get(soff + i);

        dst.copy_bits_from(src, soff, doff, len);
        for (std::uint64_t i = 0; i < ndst; ++i) CHECK(dst.get(i) == ref[i]);
    }
}

TEST_CASE("subset construction and measure") {
    auto z5 = FiniteAbelianGroup::make({5});
    auto s = GroupSubset::from_elements(z5, {GroupElement({0}), GroupElement({1})});
    CHECK(s.cardinality() == 2);
    CHECK(s.measure() == Rat(Int(2), Int(5)));

    auto z4 = FiniteAbelianGroup::make({4});
    CHECK(GroupSubset::from_elements(z4, {}).measure() == Rat(0));
    CHECK(GroupSubset::from_indices(z4, {0, 2}).measure() == Rat(Int(1), Int(2)));

    auto g33 = FiniteAbelianGroup::make({3, 3});
    CHECK(GroupSubset::full(g33).measure() == Rat(1));

    auto big = FiniteAbelianGroup::make({3, 81});
    std::vector<std::uint64_t> idx;
    for (std::uint64_t i = 0; i < 32; ++i) idx.push_back(i * 7 % big->order());
    CHECK(GroupSubset::from_indices(big, idx).measure() == Rat(Int(32), Int(243)));

    CHECK_THROWS_AS(GroupSubset::from_indices(z4, {4}), InputError);
}

TEST_CASE("random subset determinism and edge densities") {
    auto g = FiniteAbelianGroup::make({100});
    CHECK(GroupSubset::random(g, Rat(0), 3).empty());
    CHECK(GroupSubset::random(g, Rat(1), 3).cardinality() == 100);
    auto a = GroupSubset::random(g, Rat(Int(1), Int(2)), 7);
    auto b = GroupSubset::random(g, Rat(Int(1), Int(2)), 7);
    CHECK(a == b);
    auto c = GroupSubset::random(g, Rat(Int(1), Int(2)), 8);
    CHECK(!(a == c));
    CHECK_THROWS_AS(GroupSubset::random(g, Rat(Int(3), Int(2)), 1), InputError);
}

TEST_CASE("union/intersection measure identity and double complement") {
    auto g = FiniteAbelianGroup::make({6, 7});
    Xoshiro256StarStar rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        auto s = GroupSubset::random(g, Rat(Int(1), Int(3)), rng.next());
        auto t = GroupSubset::random(g, Rat(Int(1), Int(2)), rng.next());
        CHECK(s.united(t).measure() + s.intersected(t).measure() ==
              s.measure() + t.measure());
        CHECK(s.complemented().complemented() == s);
    }
}

TEST_CASE("translation equals naive index remap across shapes") {
    Xoshiro256StarStar rng(13);
    for (auto factors : std::vector<std::vector<std::uint64_t>>{
             {17}, {64}, {3, 5}, {4, 2, 5}, {2, 3, 2, 3}, {1, 6}, {255}}) {
        auto g = FiniteAbelianGroup::make(factors);
        for (int iter = 0; iter < 20; ++iter) {
            auto s = GroupSubset::random(g, Rat(Int(1), Int(3)), rng.next());
            std::uint64_t t = rng.uniform_below(g->order());
            CHECK(s.translated(t) == naive_translate(s, t));
        }
    }
}

TEST_CASE("negation is an involution and matches element negation") {
    auto g = FiniteAbelianGroup::make({5, 4});
    auto s = GroupSubset::random(g, Rat(Int(2), Int(5)), 99);
    auto n = s.negated();
    CHECK(n.cardinality() == s.cardinality());
    CHECK(n.negated() == s);
    s.bits().for_each_set([&](std::uint64_t i) {
        CHECK(n.contains(g->index_of(g->neg(g->element_at(i)))));
    });
}
