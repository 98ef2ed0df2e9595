#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sumlab {

/// Signed arbitrary-precision integer, sign-magnitude with base-2^32 limbs.
///
/// Sized for this library's workloads: every quantity is a cardinality,
/// a measure numerator/denominator, or a small power thereof, so values
/// stay within a few hundred bits. Schoolbook arithmetic is deliberate.
class Int {
public:
    Int() = default;
    Int(int v) : Int(static_cast<long long>(v)) {}
    Int(long long v);
    Int(unsigned long long v);
    Int(unsigned v) : Int(static_cast<unsigned long long>(v)) {}
    Int(long v) : Int(static_cast<long long>(v)) {}
    Int(unsigned long v) : Int(static_cast<unsigned long long>(v)) {}

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    Int negated() const;
    Int abs() const;

    /// Three-way compare: -1, 0, +1.
    static int cmp(const Int& a, const Int& b);

    friend Int operator+(const Int& a, const Int& b);
    friend Int operator-(const Int& a, const Int& b);
    friend Int operator*(const Int& a, const Int& b);
    Int& operator+=(const Int& o) { *this = *this + o; return *this; }
    Int& operator-=(const Int& o) { *this = *this - o; return *this; }
    Int& operator*=(const Int& o) { *this = *this * o; return *this; }

    /// Truncated division; remainder has the dividend's sign. q*d + r == *this.
    /// Throws std::domain_error on division by zero.
    void divmod(const Int& d, Int& q, Int& r) const;
    Int operator/(const Int& d) const;
    Int operator%(const Int& d) const;

    Int pow(unsigned e) const;
    static Int gcd(Int a, Int b);   // always non-negative
    static Int lcm(const Int& a, const Int& b);

    bool fits_u64() const;
    std::uint64_t to_u64() const;   // throws std::overflow_error if out of range
    double to_double() const;       // inexact, for display heuristics only

    std::string to_string() const;  // base 10

    friend bool operator==(const Int& a, const Int& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Int& a, const Int& b)  { return cmp(a, b) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Int& a, const Int& b)  { return cmp(a, b) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }

    std::size_t bit_length() const;

    /// Magnitude fits a machine word (fast-path predicate; ignores sign).
    bool mag_fits_u64() const { return mag_.size() <= 2; }
    std::uint64_t mag_u64() const {
        std::uint64_t v = 0;
        if (mag_.size() > 0) v |= mag_[0];
        if (mag_.size() > 1) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
        return v;
    }

private:
    // mag_ is little-endian, no leading zero limbs; sign_ == 0 iff mag_ empty.
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void trim();
    void shift_left_one();
    bool bit(std::size_t i) const;
    static std::uint32_t divmod_small(std::vector<std::uint32_t>& mag, std::uint32_t d);
};

} // namespace sumlab
