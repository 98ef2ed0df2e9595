#include "doctest.h"

#include "sumlab/search.hpp"

using namespace sumlab;

namespace {

Rat r(long long p, long long q) { return Rat(Int(p), Int(q)); }

} // namespace

TEST_CASE("exhaustive search ranks by slack with deterministic ties") {
    auto z5 = FiniteAbelianGroup::make({5});
    auto ranked = exhaustive_search(z5, InequalityId::CauchyDavenport, 0, 0, 5);
    REQUIRE(ranked.size() == 5);
    for (const auto& inst : ranked) {
        CHECK(!inst.slack.is_negative());
    }
    // arithmetic progressions are extremal: minimum slack is 0
    CHECK(ranked.front().slack == Rat(0));
    for (std::size_t i = 1; i < ranked.size(); ++i) {
        CHECK(ranked[i - 1].normalized_slack <= ranked[i].normalized_slack);
    }
    // rerun is identical
    auto again = exhaustive_search(z5, InequalityId::CauchyDavenport, 0, 0, 5);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        CHECK(ranked[i].a_mask == again[i].a_mask);
        CHECK(ranked[i].b_mask == again[i].b_mask);
    }
}

TEST_CASE("multi-threaded search merge matches single-threaded") {
    auto z6 = FiniteAbelianGroup::make({6});
    SearchOptions one;
    SearchOptions four;
    four.threads = 4;
    auto a = exhaustive_search(z6, InequalityId::Plunnecke, 1, 1, 8, one);
    auto b = exhaustive_search(z6, InequalityId::Plunnecke, 1, 1, 8, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].a_mask == b[i].a_mask);
        CHECK(a[i].b_mask == b[i].b_mask);
        CHECK(a[i].slack == b[i].slack);
    }
}

TEST_CASE("plunnecke search: identity B gives zero slack at stable sets") {
    auto z8 = FiniteAbelianGroup::make({8});
    auto ranked = exhaustive_search(z8, InequalityId::Plunnecke, 1, 0, 3);
    CHECK(ranked.front().slack == Rat(0));   // e.g. B = {0}, any A: A+B = A
    CHECK(!ranked.front().normalized_slack.is_negative());
}

TEST_CASE("random search is deterministic and dominated by exhaustive") {
    auto z6 = FiniteAbelianGroup::make({6});
    auto r1 = random_search(z6, InequalityId::Plunnecke, 1, 1, 300, r(1, 2), 42, 5);
    auto r2 = random_search(z6, InequalityId::Plunnecke, 1, 1, 300, r(1, 2), 42, 5);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].a_mask == r2[i].a_mask);
        CHECK(r1[i].b_mask == r2[i].b_mask);
    }
    auto ex = exhaustive_search(z6, InequalityId::Plunnecke, 1, 1, 1);
    REQUIRE(!ex.empty());
    REQUIRE(!r1.empty());
    CHECK(ex.front().normalized_slack <= r1.front().normalized_slack);
    for (const auto& inst : r1) CHECK(!inst.slack.is_negative());
}

TEST_CASE("search input validation") {
    auto z6 = FiniteAbelianGroup::make({6});
    CHECK_THROWS_AS(random_search(z6, InequalityId::Plunnecke, 1, 1, 0, r(1, 2), 1, 5),
                    InputError);
    CHECK_THROWS_AS(exhaustive_search(z6, InequalityId::Plunnecke, 1, 1, 0), InputError);
    SearchOptions tiny;
    tiny.pair_budget = 100;
    CHECK_THROWS_AS(exhaustive_search(z6, InequalityId::Plunnecke, 1, 1, 5, tiny), LimitError);
    auto big = FiniteAbelianGroup::make({40});
    CHECK_THROWS_AS(exhaustive_search(big, InequalityId::Plunnecke, 1, 1, 5), LimitError);
}

TEST_CASE("golden top-5 for plunnecke m=1 n=1 on Z8") {
    // Frozen output of the documented ranking rule (normalized slack,
    // then lexicographic masks). Singleton pairs are tight: lhs = 1/8,
    // alpha = 1, so the first entries are A = {0} against singleton Bs.
    auto z8 = FiniteAbelianGroup::make({8});
    auto ranked = exhaustive_search(z8, InequalityId::Plunnecke, 1, 1, 5);
    REQUIRE(ranked.size() == 5);
    std::uint64_t expect_b[] = {0x1, 0x2, 0x4, 0x8, 0x10};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(ranked[i].normalized_slack == Rat(0));
        CHECK(ranked[i].a_mask == 0x1);
        CHECK(ranked[i].b_mask == expect_b[i]);
    }
}
