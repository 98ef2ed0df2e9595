#include "doctest.h"

#include "sumlab/group.hpp"
#include "sumlab/rng.hpp"

using namespace sumlab;

TEST_CASE("group construction and indexing") {
    auto g8 = FiniteAbelianGroup::make({8});
    CHECK(g8->order() == 8);

    auto g33 = FiniteAbelianGroup::make({3, 3});
    CHECK(g33->order() == 9);

    auto g = FiniteAbelianGroup::make({4, 2, 5});
    CHECK(g->order() == 40);
    CHECK(g->index_of(GroupElement({1, 0, 0})) == 10);

    CHECK_THROWS_AS(FiniteAbelianGroup::make({}), InputError);
    CHECK_THROWS_AS(FiniteAbelianGroup::make({4, 0}), InputError);
    CHECK_THROWS_AS(FiniteAbelianGroup::make({1ULL << 20, 1ULL << 20}), InputError);
}

TEST_CASE("group arithmetic examples") {
    auto z5 = FiniteAbelianGroup::make({5});
    CHECK(z5->add(GroupElement({3}), GroupElement({4})) == GroupElement({2}));

    auto g = FiniteAbelianGroup::make({4, 2});
    CHECK(g->add(GroupElement({3, 1}), GroupElement({1, 1})) == GroupElement({0, 0}));

    auto z7 = FiniteAbelianGroup::make({7});
    CHECK(z7->neg(GroupElement({3})) == GroupElement({4}));

    auto z6 = FiniteAbelianGroup::make({6});
    CHECK(z6->scalar_mul(4, GroupElement({5})) == GroupElement({2}));
    CHECK(z6->scalar_mul(0, GroupElement({5})) == z6->identity());
    CHECK(z6->scalar_mul(1, GroupElement({5})) == GroupElement({5}));

    CHECK_THROWS_AS(g->add(GroupElement({1}), GroupElement({0, 0})), InputError);
}

TEST_CASE("index/element bijection and group laws") {
    auto g = FiniteAbelianGroup::make({3, 4, 2});
    for (std::uint64_t i = 0; i < g->order(); ++i) {
        CHECK(g->index_of(g->element_at(i)) == i);
    }
    Xoshiro256StarStar rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        auto a = g->element_at(rng.uniform_below(g->order()));
        auto b = g->element_at(rng.uniform_below(g->order()));
        auto c = g->element_at(rng.uniform_below(g->order()));
        CHECK(g->add(g->add(a, b), c) == g->add(a, g->add(b, c)));
        CHECK(g->add(a, b) == g->add(b, a));
        CHECK(g->add(a, g->neg(a)) == g->identity());
        CHECK(g->add_indices(g->index_of(a), g->index_of(b)) == g->index_of(g->add(a, b)));
        CHECK(g->neg_index(g->index_of(a)) == g->index_of(g->neg(a)));
    }
}

TEST_CASE("group literal parsing") {
    CHECK(FiniteAbelianGroup::parse("Z8")->factors() == std::vector<std::uint64_t>{8});
    CHECK(FiniteAbelianGroup::parse("z3XZ3")->factors() == std::vector<std::uint64_t>{3, 3});
    CHECK(FiniteAbelianGroup::parse("Z4xZ2xZ5")->to_string() == "Z4xZ2xZ5");
    CHECK_THROWS_AS(FiniteAbelianGroup::parse(""), InputError);
    CHECK_THROWS_AS(FiniteAbelianGroup::parse("Q8"), InputError);
    CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z8x"), InputError);
    CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z"), InputError);
}
