#pragma once

#include "sumlab/bigint.hpp"

#include <cstdint>
#include <string>

namespace sumlab {

/// Exact rational number, always reduced, denominator > 0.
///
/// Every inequality side in the verification paths is a Rat; floating
/// point never enters a verdict. to_decimal() exists only for report
/// rendering and is flagged inexact by the callers that use it.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(int v) : num_(v), den_(1) {}
    Rat(unsigned long long v) : num_(v), den_(1) {}
    Rat(const Int& v) : num_(v), den_(1) {}
    Rat(Int num, Int den);   // reduces; throws std::domain_error on zero den

    /// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument.
    static Rat parse(const std::string& s);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const { return den_ == Int(1); }

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);   // throws on zero divisor
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }
    Rat negated() const;

    /// Integer power; negative exponents require a nonzero value.
    Rat pow(int e) const;

    static int cmp(const Rat& a, const Rat& b);
    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Rat& a, const Rat& b)  { return cmp(a, b) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b)  { return cmp(a, b) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    /// Decimal rendering rounded to `sig` significant digits (default 12).
    /// Fixed notation for exponents in [-4, sig), scientific otherwise.
    std::string to_decimal(int sig = 12) const;

private:
    Int num_;
    Int den_;
    void reduce();
};

} // namespace sumlab
