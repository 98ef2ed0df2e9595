#include "doctest.h"

#include "sumlab/rng.hpp"
#include "sumlab/sumset.hpp"

using namespace sumlab;

namespace {

// pairwise-enumeration oracle, independent of both engines
GroupSubset naive_sumset(const GroupSubset& s, const GroupSubset& t) {
    GroupSubset out(s.group());
    for (auto a : s.indices())
        for (auto b : t.indices()) out.insert(s.group()->add_indices(a, b));
    return out;
}

} // namespace

TEST_CASE("sumset_direct worked examples") {
    auto z5 = FiniteAbelianGroup::make({5});
    auto s = GroupSubset::from_indices(z5, {0, 1});
    auto t = GroupSubset::from_indices(z5, {0, 2});
    CHECK(sumset_direct(s, t) == GroupSubset::from_indices(z5, {0, 1, 2, 3}));

    // identity element set
    auto zero = GroupSubset::from_indices(z5, {0});
    CHECK(sumset_direct(s, zero) == s);

    // depth-1 pre-Cantor cells in Z_3 cover the whole group
    auto z3 = FiniteAbelianGroup::make({3});
    auto c = GroupSubset::from_indices(z3, {0, 2});
    CHECK(sumset_direct(c, c) == GroupSubset::full(z3));

    // empty absorbs
    CHECK(sumset_direct(GroupSubset(z5), s).empty());
}

TEST_CASE("engine equivalence: direct == convolution == naive") {
    Xoshiro256StarStar rng(2024);
    for (auto factors : std::vector<std::vector<std::uint64_t>>{
             {30}, {64}, {5, 7}, {4, 2, 5}, {3, 3, 3}, {1, 12}}) {
        auto g = FiniteAbelianGroup::make(factors);
        for (int iter = 0; iter < 12; ++iter) {
            auto s = GroupSubset::random(g, Rat(Int(1), Int(4)), rng.next());
            auto t = GroupSubset::random(g, Rat(Int(1), Int(3)), rng.next());
            auto direct = sumset_direct(s, t);
            CHECK(direct == sumset_convolution(s, t));
            CHECK(direct == naive_sumset(s, t));
        }
    }
}

TEST_CASE("sumset algebraic properties") {
    auto g = FiniteAbelianGroup::make({9, 4});
    Xoshiro256StarStar rng(77);
    for (int iter = 0; iter < 15; ++iter) {
        auto s = GroupSubset::random(g, Rat(Int(1), Int(5)), rng.next());
        auto t = GroupSubset::random(g, Rat(Int(1), Int(5)), rng.next());
        auto u = GroupSubset::random(g, Rat(Int(1), Int(5)), rng.next());
        CHECK(sumset(s, t) == sumset(t, s));
        CHECK(sumset(sumset(s, t), u) == sumset(s, sumset(t, u)));
        if (!s.empty() && !t.empty()) {
            CHECK(sumset(s, t).cardinality() >= std::max(s.cardinality(), t.cardinality()));
        }
    }
    auto fullg = GroupSubset::full(g);
    auto one = GroupSubset::singleton_identity(g);
    CHECK(sumset_convolution(fullg, one) == fullg);
}

TEST_CASE("iterated sumset doubling equals naive folds") {
    auto g = FiniteAbelianGroup::make({24});
    Xoshiro256StarStar rng(3);
    for (int iter = 0; iter < 10; ++iter) {
        auto b = GroupSubset::random(g, Rat(Int(1), Int(6)), rng.next());
        if (b.empty()) continue;
        GroupSubset acc = b;
        for (int m = 1; m <= 5; ++m) {
            CHECK(iterated_sumset(m, b, 0) == acc);
            acc = sumset(acc, b);
        }
    }
}

TEST_CASE("iterated sumset conventions and examples") {
    auto z5 = FiniteAbelianGroup::make({5});
    auto b = GroupSubset::from_indices(z5, {0, 1});
    CHECK(iterated_sumset(1, b, 0) == b);
    CHECK(iterated_sumset(0, b, 0) == GroupSubset::singleton_identity(z5));
    CHECK(iterated_sumset(1, b, 1) == GroupSubset::from_indices(z5, {0, 1, 4}));
    CHECK_THROWS_AS(iterated_sumset(-1, b, 0), InputError);
    CHECK_THROWS_AS(iterated_sumset(1, GroupSubset(z5), 0), InputError);
}

TEST_CASE("ruzsa distance examples") {
    auto z5 = FiniteAbelianGroup::make({5});
    auto b = GroupSubset::from_indices(z5, {0, 1});
    CHECK(ruzsa_distance(b, b) == Rat(Int(9), Int(4)));

    auto z6 = FiniteAbelianGroup::make({6});
    auto h = GroupSubset::from_indices(z6, {0, 2, 4});   // subgroup
    CHECK(ruzsa_distance(h, h) == Rat(1));

    auto p = GroupSubset::from_indices(z6, {3});
    auto q = GroupSubset::from_indices(z6, {1});
    CHECK(ruzsa_distance(p, q) == Rat(1));
    CHECK_THROWS_AS(ruzsa_distance(GroupSubset(z6), h), InputError);
}

TEST_CASE("group mismatch is rejected") {
    auto z5 = FiniteAbelianGroup::make({5});
    auto z6 = FiniteAbelianGroup::make({6});
    auto s = GroupSubset::from_indices(z5, {0, 1});
    auto t = GroupSubset::from_indices(z6, {0, 1});
    CHECK_THROWS_AS(sumset_direct(s, t), InputError);
    CHECK_THROWS_AS(sumset_convolution(s, t), InputError);
}

TEST_CASE("engine override flags") {
    auto g = FiniteAbelianGroup::make({128});
    auto s = GroupSubset::random(g, Rat(Int(1), Int(2)), 5);
    auto t = GroupSubset::random(g, Rat(Int(1), Int(2)), 6);
    EngineOptions direct{Engine::Direct};
    EngineOptions conv{Engine::Convolution};
    CHECK(sumset(s, t, direct) == sumset(s, t, conv));
    EngineOptions tiny_cap;
    tiny_cap.engine = Engine::Convolution;
    tiny_cap.max_transform_size = 64;
    CHECK_THROWS_AS(sumset(s, t, tiny_cap), LimitError);
}
