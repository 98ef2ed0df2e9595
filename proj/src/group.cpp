#include "sumlab/group.hpp"

#include <algorithm>
#include <cctype>

namespace sumlab {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> factors, std::uint64_t order)
    : factors_(std::move(factors)), order_(order) {
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) {
        strides_[i - 1] = strides_[i] * factors_[i];
    }
}

GroupPtr FiniteAbelianGroup::make(std::vector<std::uint64_t> factors, std::uint64_t max_order) {
    if (factors.empty()) throw InputError("group: empty factor list");
    std::uint64_t order = 1;
    for (auto f : factors) {
        if (f == 0) throw InputError("group: zero factor");
        if (f > max_order || order > max_order / f)
            throw InputError("group: order exceeds configured cap " + std::to_string(max_order));
        order *= f;
    }
    return GroupPtr(new FiniteAbelianGroup(std::move(factors), order));
}

GroupPtr FiniteAbelianGroup::parse(const std::string& literal, std::uint64_t max_order) {
    std::vector<std::uint64_t> factors;
    std::size_t i = 0;
    const std::size_t n = literal.size();
    while (i < n) {
        if (literal[i] != 'Z' && literal[i] != 'z')
            throw InputError("group literal: expected 'Z' at position " + std::to_string(i) +
                             " in \"" + literal + "\"");
        ++i;
        if (i >= n || !std::isdigit(static_cast<unsigned char>(literal[i])))
            throw InputError("group literal: expected digits at position " + std::to_string(i) +
                             " in \"" + literal + "\"");
        std::uint64_t v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(literal[i]))) {
            if (v > (UINT64_MAX - 9) / 10) throw InputError("group literal: factor too large");
            v = v * 10 + static_cast<std::uint64_t>(literal[i] - '0');
            ++i;
        }
        factors.push_back(v);
        if (i < n) {
            if (literal[i] != 'x' && literal[i] != 'X')
                throw InputError("group literal: expected 'x' at position " + std::to_string(i) +
                                 " in \"" + literal + "\"");
            ++i;
            if (i == n) throw InputError("group literal: trailing separator in \"" + literal + "\"");
        }
    }
    if (factors.empty()) throw InputError("group literal: empty");
    return make(std::move(factors), max_order);
}

std::string FiniteAbelianGroup::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += 'x';
        s += 'Z';
        s += std::to_string(factors_[i]);
    }
    return s;
}

void FiniteAbelianGroup::validate_element(const GroupElement& e) const {
    if (e.coords.size() != factors_.size())
        throw InputError("element: dimension mismatch (" + std::to_string(e.coords.size()) +
                         " coords for " + to_string() + ")");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (e.coords[i] >= factors_[i])
            throw InputError("element: coordinate " + std::to_string(i) + " out of range");
    }
}

std::uint64_t FiniteAbelianGroup::index_of(const GroupElement& e) const {
    validate_element(e);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx += e.coords[i] * strides_[i];
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::uint64_t index) const {
    if (index >= order_) throw InputError("element index out of range");
    GroupElement e;
    e.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        e.coords[i] = index / strides_[i];
        index %= strides_[i];
    }
    return e;
}

GroupElement FiniteAbelianGroup::identity() const {
    return GroupElement(std::vector<std::uint64_t>(factors_.size(), 0));
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    validate_element(a);
    validate_element(b);
    GroupElement r;
    r.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::uint64_t s = a.coords[i] + b.coords[i];
        if (s >= factors_[i]) s -= factors_[i];
        r.coords[i] = s;
    }
    return r;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
    validate_element(a);
    GroupElement r;
    r.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        r.coords[i] = a.coords[i] == 0 ? 0 : factors_[i] - a.coords[i];
    }
    return r;
}

GroupElement FiniteAbelianGroup::scalar_mul(long long m, const GroupElement& a) const {
    validate_element(a);
    GroupElement r;
    r.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::uint64_t n = factors_[i];
        std::uint64_t mm = static_cast<std::uint64_t>(((m % static_cast<long long>(n)) +
                                                       static_cast<long long>(n)) %
                                                      static_cast<long long>(n));
        // (mm * coord) mod n without overflow: coord, mm < n <= 2^32
        r.coords[i] = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(mm) * a.coords[i]) % n);
    }
    return r;
}

std::uint64_t FiniteAbelianGroup::add_indices(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::uint64_t ca = a / strides_[i];
        std::uint64_t cb = b / strides_[i];
        a %= strides_[i];
        b %= strides_[i];
        std::uint64_t s = ca + cb;
        if (s >= factors_[i]) s -= factors_[i];
        idx += s * strides_[i];
    }
    return idx;
}

std::uint64_t FiniteAbelianGroup::neg_index(std::uint64_t a) const {
    std::call_once(neg_once_, [this] {
        neg_table_.resize(order_);
        for (std::uint64_t v = 0; v < order_; ++v) {
            std::uint64_t nidx = 0;
            std::uint64_t rem = v;
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                std::uint64_t c = rem / strides_[i];
                rem %= strides_[i];
                std::uint64_t nc = c == 0 ? 0 : factors_[i] - c;
                nidx += nc * strides_[i];
            }
            neg_table_[v] = nidx;
        }
    });
    return neg_table_[a];
}

} // namespace sumlab
