#pragma once

#include <cstdint>
#include <vector>

namespace sumlab::ntt {

/// Number-theoretic transform over F_p with p = 29 * 2^57 + 1.
///
/// The sumset convolution engine relies on counts being exact: every
/// convolution coefficient is a nonnegative integer bounded by the group
/// order (< 2^32), far below p, so support recovery needs no rounding
/// argument at all — a coefficient is nonzero over Z iff it is nonzero
/// mod p.
inline constexpr std::uint64_t kPrime = 4179340454199820289ULL;  // 29 * 2^57 + 1
inline constexpr std::uint64_t kGenerator = 3;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b);
std::uint64_t powmod(std::uint64_t b, std::uint64_t e);

/// In-place transform; size must be a power of two dividing 2^57.
void transform(std::vector<std::uint64_t>& a, bool inverse);

/// Acyclic convolution of the two integer sequences mod p. The result
/// length is a.size() + b.size() - 1 (empty if either input is empty).
std::vector<std::uint64_t> convolve(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b);

} // namespace sumlab::ntt
