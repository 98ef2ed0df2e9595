#include "sumlab/ntt.hpp"

#include "sumlab/error.hpp"

#include <bit>

namespace sumlab::ntt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t acc = 1;
    while (e) {
        if (e & 1) acc = mulmod(acc, b);
        b = mulmod(b, b);
        e >>= 1;
    }
    return acc;
}

void transform(std::vector<std::uint64_t>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    if ((n & (n - 1)) != 0 || n > (1ULL << 57))
        throw LimitError("ntt: transform size must be a power of two <= 2^57");

    // bit reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::uint64_t w = powmod(kGenerator, (kPrime - 1) / len);
        if (inverse) w = powmod(w, kPrime - 2);
        for (std::size_t i = 0; i < n; i += len) {
            std::uint64_t wj = 1;
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::uint64_t u = a[i + j];
                std::uint64_t v = mulmod(a[i + j + len / 2], wj);
                a[i + j] = u + v >= kPrime ? u + v - kPrime : u + v;
                a[i + j + len / 2] = u >= v ? u - v : u + kPrime - v;
                wj = mulmod(wj, w);
            }
        }
    }

    if (inverse) {
        std::uint64_t ninv = powmod(n % kPrime, kPrime - 2);
        for (auto& x : a) x = mulmod(x, ninv);
    }
}

std::vector<std::uint64_t> convolve(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    if (a.empty() || b.empty()) return {};
    std::size_t out_len = a.size() + b.size() - 1;
    std::size_t n = std::bit_ceil(out_len);
    a.resize(n, 0);
    b.resize(n, 0);
    transform(a, false);
    transform(b, false);
    for (std::size_t i = 0; i < n; ++i) a[i] = mulmod(a[i], b[i]);
    transform(a, true);
    a.resize(out_len);
    return a;
}

} // namespace sumlab::ntt
