#include "sumlab/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumlab {

Int::Int(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // careful with LLONG_MIN: negate in unsigned space
    unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
    while (u) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
        u >>= 32;
    }
}

Int::Int(unsigned long long u) {
    if (u == 0) return;
    sign_ = 1;
    while (u) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
        u >>= 32;
    }
}

void Int::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

Int Int::negated() const {
    Int r = *this;
    r.sign_ = -r.sign_;
    return r;
}

Int Int::abs() const {
    Int r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int Int::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int Int::cmp(const Int& a, const Int& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int m = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? m : -m;
}

std::vector<std::uint32_t> Int::add_mag(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> r(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// requires a >= b
std::vector<std::uint32_t> Int::sub_mag(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) { s += (1LL << 32); borrow = 1; } else { borrow = 0; }
        r[i] = static_cast<std::uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> Int::mul_mag(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t s = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t s = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Int operator+(const Int& a, const Int& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    Int r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = Int::add_mag(a.mag_, b.mag_);
    } else {
        int m = Int::cmp_mag(a.mag_, b.mag_);
        if (m == 0) return Int();
        if (m > 0) {
            r.sign_ = a.sign_;
            r.mag_ = Int::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = Int::sub_mag(b.mag_, a.mag_);
        }
    }
    r.trim();
    return r;
}

Int operator-(const Int& a, const Int& b) { return a + b.negated(); }

Int operator*(const Int& a, const Int& b) {
    Int r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = Int::mul_mag(a.mag_, b.mag_);
    r.trim();
    return r;
}

std::size_t Int::bit_length() const {
    if (mag_.empty()) return 0;
    std::uint32_t top = mag_.back();
    std::size_t bits = (mag_.size() - 1) * 32;
    while (top) { ++bits; top >>= 1; }
    return bits;
}

bool Int::bit(std::size_t i) const {
    std::size_t limb = i / 32;
    if (limb >= mag_.size()) return false;
    return (mag_[limb] >> (i % 32)) & 1u;
}

void Int::shift_left_one() {
    std::uint32_t carry = 0;
    for (auto& w : mag_) {
        std::uint32_t next = w >> 31;
        w = (w << 1) | carry;
        carry = next;
    }
    if (carry) mag_.push_back(carry);
    if (!mag_.empty() && sign_ == 0) sign_ = 1;
}

// Binary long division on magnitudes; sizes here never exceed a few limbs,
// so the O(bits * limbs) cost is irrelevant.
void Int::divmod(const Int& d, Int& q, Int& r) const {
    if (d.sign_ == 0) throw std::domain_error("Int: division by zero");
    if (sign_ == 0) { q = Int(); r = Int(); return; }
    if (cmp_mag(mag_, d.mag_) < 0) { q = Int(); r = *this; return; }

    if (mag_fits_u64() && d.mag_fits_u64()) {
        std::uint64_t qq = mag_u64() / d.mag_u64();
        std::uint64_t rr = mag_u64() % d.mag_u64();
        q = Int(qq);
        if (sign_ * d.sign_ < 0) q = q.negated();
        r = Int(rr);
        if (sign_ < 0) r = r.negated();
        return;
    }

    Int qq, rr;
    std::size_t n = bit_length();
    for (std::size_t i = n; i-- > 0;) {
        rr.shift_left_one();
        if (bit(i)) {
            if (rr.mag_.empty()) { rr.mag_.push_back(1); rr.sign_ = 1; }
            else {
                rr.mag_ = add_mag(rr.mag_, {1});
                rr.sign_ = 1;
            }
        }
        qq.shift_left_one();
        if (cmp_mag(rr.mag_, d.mag_) >= 0) {
            rr.mag_ = sub_mag(rr.mag_, d.mag_);
            rr.trim();
            if (qq.mag_.empty()) { qq.mag_.push_back(1); qq.sign_ = 1; }
            else { qq.mag_ = add_mag(qq.mag_, {1}); qq.sign_ = 1; }
        }
    }
    qq.trim();
    rr.trim();
    qq.sign_ = qq.mag_.empty() ? 0 : sign_ * d.sign_;
    rr.sign_ = rr.mag_.empty() ? 0 : sign_;
    q = std::move(qq);
    r = std::move(rr);
}

Int Int::operator/(const Int& d) const {
    Int q, r;
    divmod(d, q, r);
    return q;
}

Int Int::operator%(const Int& d) const {
    Int q, r;
    divmod(d, q, r);
    return r;
}

Int Int::pow(unsigned e) const {
    Int base = *this, acc = Int(1);
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Int Int::gcd(Int a, Int b) {
    if (a.mag_fits_u64() && b.mag_fits_u64()) {
        std::uint64_t x = a.mag_u64(), y = b.mag_u64();
        while (y) {
            std::uint64_t t = x % y;
            x = y;
            y = t;
        }
        return Int(x);
    }
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        Int r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Int Int::lcm(const Int& a, const Int& b) {
    if (a.is_zero() || b.is_zero()) return Int();
    return (a.abs() / gcd(a, b)) * b.abs();
}

bool Int::fits_u64() const {
    return sign_ >= 0 && mag_.size() <= 2;
}

std::uint64_t Int::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("Int: does not fit in 64 bits");
    std::uint64_t v = 0;
    if (mag_.size() > 0) v |= mag_[0];
    if (mag_.size() > 1) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return v;
}

double Int::to_double() const {
    double v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -v : v;
}

std::uint32_t Int::divmod_small(std::vector<std::uint32_t>& mag, std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | mag[i];
        mag[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    return static_cast<std::uint32_t>(rem);
}

std::string Int::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        std::uint32_t chunk = divmod_small(m, 1000000000u);
        if (m.empty()) {
            // most significant chunk, no zero padding
            std::string s = std::to_string(chunk);
            std::reverse(s.begin(), s.end());
            digits += s;
        } else {
            for (int k = 0; k < 9; ++k) {
                digits += static_cast<char>('0' + chunk % 10);
                chunk /= 10;
            }
        }
    }
    if (sign_ < 0) digits += '-';
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace sumlab
