#include "doctest.h"

#include "sumlab/bigint.hpp"
#include "sumlab/rational.hpp"
#include "sumlab/ntt.hpp"
#include "sumlab/rng.hpp"

#include <cstdint>

using namespace sumlab;

TEST_CASE("Int arithmetic matches 128-bit reference on random values") {
    Xoshiro256StarStar rng(42);
    for (int iter = 0; iter < 2000; ++iter) {
        std::int64_t a = static_cast<std::int64_t>(rng.next()) >> (rng.next() % 32);
        std::int64_t b = static_cast<std::int64_t>(rng.next()) >> (rng.next() % 32);
        Int A(a), B(b);
        __int128 sum = static_cast<__int128>(a) + b;
        __int128 dif = static_cast<__int128>(a) - b;
        __int128 pro = static_cast<__int128>(a) * b;
        auto eq = [](const Int& x, __int128 v) {
            __int128 av = v < 0 ? -v : v;
            Int ref(static_cast<unsigned long long>(av >> 64));
            ref = ref * Int(1ULL << 32) * Int(1ULL << 32) +
                  Int(static_cast<unsigned long long>(av & ~0ULL));
            if (v < 0) ref = ref.negated();
            return x == ref;
        };
        CHECK(eq(A + B, sum));
        CHECK(eq(A - B, dif));
        CHECK(eq(A * B, pro));
        if (b != 0) {
            Int q, r;
            A.divmod(B, q, r);
            CHECK(q == Int(a / b));
            CHECK(r == Int(a % b));
        }
    }
}

TEST_CASE("Int divmod identity on wide operands") {
    Xoshiro256StarStar rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        Int a = Int(rng.next()) * Int(rng.next()) + Int(rng.next());
        Int d = Int(rng.next() % 1000000 + 1);
        if (rng.next() & 1) a = a.negated();
        Int q, r;
        a.divmod(d, q, r);
        CHECK(q * d + r == a);
        CHECK(r.abs() < d.abs());
    }
}

TEST_CASE("Int to_string") {
    CHECK(Int(0).to_string() == "0");
    CHECK(Int(-123456789).to_string() == "-123456789");
    CHECK((Int(1000000000000ULL) * Int(1000000000000ULL)).to_string() ==
          "1000000000000000000000000");
    CHECK(Int::gcd(Int(12), Int(-18)) == Int(6));
    CHECK(Int::lcm(Int(4), Int(6)) == Int(12));
    CHECK(Int(2).pow(100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("Rat reduction, comparison and powers") {
    Rat half(Int(2), Int(4));
    CHECK(half.to_string() == "1/2");
    CHECK(Rat(Int(-3), Int(-6)) == half);
    CHECK(Rat(Int(3), Int(-6)) == half.negated());
    CHECK(Rat::parse("9/24") == Rat(Int(3), Int(8)));
    CHECK(Rat::parse("-2") == Rat(-2));
    CHECK(Rat(Int(3), Int(2)).pow(2) == Rat(Int(9), Int(4)));
    CHECK(Rat(Int(2), Int(3)).pow(-2) == Rat(Int(9), Int(4)));
    CHECK(Rat(Int(1), Int(3)) + Rat(Int(1), Int(6)) == half);
    CHECK(Rat(Int(1), Int(2)) * Rat(Int(2), Int(3)) == Rat(Int(1), Int(3)));
    CHECK(Rat(Int(5), Int(8)) < Rat(Int(2), Int(3)));
    CHECK_THROWS(Rat(Int(1), Int(0)));
    CHECK_THROWS(Rat::parse("x/3"));
}

TEST_CASE("Rat decimal rendering at 12 significant digits") {
    CHECK(Rat(Int(3), Int(8)).to_decimal() == "0.375");
    CHECK(Rat(0).to_decimal() == "0");
    CHECK(Rat(1).to_decimal() == "1");
    CHECK(Rat(Int(1), Int(3)).to_decimal() == "0.333333333333");
    CHECK(Rat(Int(2), Int(3)).to_decimal() == "0.666666666667");
    CHECK(Rat(Int(-1), Int(3)).to_decimal() == "-0.333333333333");
    CHECK(Rat(Int(1), Int(10000)).to_decimal() == "0.0001");
    CHECK(Rat(Int(1), Int(1000000)).to_decimal() == "1e-6");
    CHECK(Rat(Int(999999999999ULL), Int(1)).to_decimal() == "999999999999");
    CHECK(Rat(Int(9999999999999ULL), Int(1)).to_decimal() == "1e13");
}

TEST_CASE("ntt convolution matches schoolbook on random sequences") {
    Xoshiro256StarStar rng(404);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t la = 1 + rng.uniform_below(40);
        std::size_t lb = 1 + rng.uniform_below(40);
        std::vector<std::uint64_t> a(la), b(lb);
        for (auto& x : a) x = rng.uniform_below(1000);
        for (auto& x : b) x = rng.uniform_below(1000);
        std::vector<std::uint64_t> ref(la + lb - 1, 0);
        for (std::size_t i = 0; i < la; ++i)
            for (std::size_t j = 0; j < lb; ++j) ref[i + j] += a[i] * b[j];
        CHECK(sumlab::ntt::convolve(a, b) == ref);
    }
}

TEST_CASE("xoshiro256** reference stream") {
    // first outputs for seed 0 under splitmix64 state expansion
    Xoshiro256StarStar a(0), b(0);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Xoshiro256StarStar c(1);
    bool differs = false;
    for (int i = 0; i < 10; ++i) differs |= (a.next() != c.next());
    CHECK(differs);
    // unbiased bounded draw stays in range
    for (int i = 0; i < 1000; ++i) CHECK(c.uniform_below(7) < 7);
}
