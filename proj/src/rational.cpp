#include "sumlab/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace sumlab {

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
    reduce();
}

void Rat::reduce() {
    if (den_.is_negative()) {
        num_ = num_.negated();
        den_ = den_.negated();
    }
    if (num_.is_zero()) {
        den_ = Int(1);
        return;
    }
    Int g = Int::gcd(num_, den_);
    if (g != Int(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rat Rat::parse(const std::string& s) {
    auto parse_int = [](const std::string& t) -> Int {
        if (t.empty()) throw std::invalid_argument("Rat: empty integer in \"" + t + "\"");
        std::size_t i = 0;
        bool neg = false;
        if (t[0] == '-') { neg = true; i = 1; }
        if (i >= t.size()) throw std::invalid_argument("Rat: bare sign");
        Int v(0);
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("Rat: invalid digit '" + std::string(1, t[i]) + "'");
            v = v * Int(10) + Int(t[i] - '0');
        }
        return neg ? v.negated() : v;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s), Int(1));
    return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rat Rat::negated() const {
    Rat r = *this;
    r.num_ = r.num_.negated();
    return r;
}

Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

Rat Rat::pow(int e) const {
    if (e >= 0) return Rat(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    if (is_zero()) throw std::domain_error("Rat: zero to negative power");
    unsigned k = static_cast<unsigned>(-(static_cast<long long>(e)));
    return Rat(den_.pow(k), num_.pow(k));
}

int Rat::cmp(const Rat& a, const Rat& b) {
    int sa = a.num_.signum(), sb = b.num_.signum();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (a.num_.mag_fits_u64() && b.num_.mag_fits_u64() && a.den_.mag_fits_u64() &&
        b.den_.mag_fits_u64()) {
        unsigned __int128 l = static_cast<unsigned __int128>(a.num_.mag_u64()) * b.den_.mag_u64();
        unsigned __int128 r = static_cast<unsigned __int128>(b.num_.mag_u64()) * a.den_.mag_u64();
        int m = l < r ? -1 : (l > r ? 1 : 0);
        return sa >= 0 ? m : -m;
    }
    return Int::cmp(a.num_ * b.den_, b.num_ * a.den_);
}

std::string Rat::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rat::to_decimal(int sig) const {
    if (sig < 1) sig = 1;
    if (num_.is_zero()) return "0";
    Int p = num_.abs();
    const Int& q = den_;

    // decimal exponent e10: p/q lies in [10^e10, 10^(e10+1))
    int e10 = 0;
    Int ten(10);
    if (p >= q) {
        Int scaled = q;
        while (scaled * ten <= p) { scaled *= ten; ++e10; }
    } else {
        Int scaled = p;
        while (scaled < q) { scaled *= ten; --e10; }
    }

    // digits = round(p/q * 10^(sig-1-e10)) as integer with exactly sig digits
    long long shift = static_cast<long long>(sig) - 1 - e10;
    Int np = p, nq = q;
    if (shift >= 0) np = np * ten.pow(static_cast<unsigned>(shift));
    else nq = nq * ten.pow(static_cast<unsigned>(-shift));
    Int dq, dr;
    np.divmod(nq, dq, dr);
    // round half away from zero
    if (dr * Int(2) >= nq) dq += Int(1);
    std::string digits = dq.to_string();
    if (static_cast<int>(digits.size()) > sig) {
        // rounding carried over (e.g. 99.96 -> 100 at 3 digits)
        digits.pop_back();
        ++e10;
    }

    std::string out;
    if (num_.is_negative()) out += '-';
    if (e10 >= -4 && e10 < sig) {
        if (e10 >= 0) {
            out += digits.substr(0, static_cast<std::size_t>(e10) + 1);
            std::string frac = digits.substr(static_cast<std::size_t>(e10) + 1);
            while (!frac.empty() && frac.back() == '0') frac.pop_back();
            if (!frac.empty()) out += "." + frac;
        } else {
            out += "0.";
            out += std::string(static_cast<std::size_t>(-e10 - 1), '0');
            std::string frac = digits;
            while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
            out += frac;
        }
    } else {
        out += digits.substr(0, 1);
        std::string frac = digits.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
        out += "e" + std::to_string(e10);
    }
    return out;
}

} // namespace sumlab
