#include "sumlab/sumset.hpp"

#include "sumlab/ntt.hpp"

#include <bit>
#include <cmath>

namespace sumlab {

GroupSubset sumset_direct(const GroupSubset& s, const GroupSubset& t) {
    require_same_group(s, t, "sumset");
    const GroupPtr& g = s.group();
    GroupSubset out(g);
    if (s.empty() || t.empty()) return out;

    // translate the larger set by each element of the smaller one
    const GroupSubset& small = s.cardinality() <= t.cardinality() ? s : t;
    const GroupSubset& big = s.cardinality() <= t.cardinality() ? t : s;

    BitVec acc(g->order());
    BitVec tmp(g->order());
    BitVec scratch;
    small.bits().for_each_set([&](std::uint64_t idx) {
        tmp = big.bits();
        translate_bits_in_place(*g, tmp, idx, scratch);
        acc |= tmp;
    });
    out.adopt_bits(std::move(acc));
    return out;
}

namespace {

// Kronecker embedding: pad each axis to M_i = 2*N_i - 1 so that the
// one-dimensional acyclic convolution of the embedded indicators has no
// carries between axes; coordinate sums are then folded mod N_i.
struct Embedding {
    std::vector<std::uint64_t> padded;      // M_i
    std::vector<std::uint64_t> pstrides;    // strides over padded dims
    std::uint64_t padded_total = 1;
};

Embedding make_embedding(const FiniteAbelianGroup& g) {
    Embedding e;
    e.padded.resize(g.factor_count());
    e.pstrides.assign(g.factor_count(), 1);
    for (std::size_t i = 0; i < g.factor_count(); ++i) {
        std::uint64_t n = g.factors()[i];
        e.padded[i] = n == 1 ? 1 : 2 * n - 1;
    }
    for (std::size_t i = g.factor_count(); i-- > 1;)
        e.pstrides[i - 1] = e.pstrides[i] * e.padded[i];
    e.padded_total = e.pstrides[0] * e.padded[0];
    return e;
}

std::vector<std::uint64_t> embed(const FiniteAbelianGroup& g, const Embedding& e,
                                 const GroupSubset& s) {
    std::vector<std::uint64_t> a(e.padded_total, 0);
    s.bits().for_each_set([&](std::uint64_t idx) {
        std::uint64_t p = 0;
        for (std::size_t i = 0; i < g.factor_count(); ++i) {
            std::uint64_t c = idx / g.stride(i);
            idx %= g.stride(i);
            p += c * e.pstrides[i];
        }
        a[p] = 1;
    });
    return a;
}

} // namespace

GroupSubset sumset_convolution(const GroupSubset& s, const GroupSubset& t,
                               const EngineOptions& opt) {
    require_same_group(s, t, "sumset");
    const GroupPtr& g = s.group();
    GroupSubset out(g);
    if (s.empty() || t.empty()) return out;

    Embedding e = make_embedding(*g);
    std::uint64_t conv_len = 2 * e.padded_total - 1;
    if (std::bit_ceil(conv_len) > opt.max_transform_size)
        throw LimitError("sumset_convolution: transform size " +
                         std::to_string(std::bit_ceil(conv_len)) + " exceeds cap " +
                         std::to_string(opt.max_transform_size));

    std::vector<std::uint64_t> counts = ntt::convolve(embed(*g, e, s), embed(*g, e, t));

    for (std::uint64_t p = 0; p < counts.size(); ++p) {
        if (counts[p] == 0) continue;
        std::uint64_t rem = p, idx = 0;
        for (std::size_t i = 0; i < g->factor_count(); ++i) {
            std::uint64_t c = rem / e.pstrides[i];
            rem %= e.pstrides[i];
            std::uint64_t n = g->factors()[i];
            if (c >= n) c -= n;   // fold: c <= 2n-2
            idx += c * g->stride(i);
        }
        out.insert(idx);
    }
    return out;
}

GroupSubset sumset(const GroupSubset& s, const GroupSubset& t, const EngineOptions& opt) {
    switch (opt.engine) {
        case Engine::Direct: return sumset_direct(s, t);
        case Engine::Convolution: return sumset_convolution(s, t, opt);
        case Engine::Auto: break;
    }
    const double order = static_cast<double>(s.group()->order());
    const double work = static_cast<double>(s.cardinality()) *
                        static_cast<double>(t.cardinality());
    if (order < 2 || work < opt.direct_cost_factor * order * std::log2(order))
        return sumset_direct(s, t);
    // fall back to direct when the transform would not fit the cap
    Embedding e = make_embedding(*s.group());
    if (std::bit_ceil(2 * e.padded_total - 1) > opt.max_transform_size)
        return sumset_direct(s, t);
    return sumset_convolution(s, t, opt);
}

namespace {

// kB for k >= 1 via binary doubling on the addition chain.
GroupSubset repeated_sum(const GroupSubset& b, long long k, const EngineOptions& opt) {
    GroupSubset base = b;
    GroupSubset acc(b.group());
    bool have_acc = false;
    while (k) {
        if (k & 1) {
            acc = have_acc ? sumset(acc, base, opt) : base;
            have_acc = true;
        }
        k >>= 1;
        if (k) base = sumset(base, base, opt);
    }
    return acc;
}

} // namespace

GroupSubset iterated_sumset(long long m, const GroupSubset& b, long long n,
                            const EngineOptions& opt) {
    if (m < 0 || n < 0) throw InputError("iterated sumset: m, n must be non-negative");
    if (m + n == 0) return GroupSubset::singleton_identity(b.group());
    if (b.empty()) throw InputError("iterated sumset: empty set with m+n > 0");
    if (n == 0) return repeated_sum(b, m, opt);
    GroupSubset minus = repeated_sum(b, n, opt).negated();
    if (m == 0) return minus;
    return sumset(repeated_sum(b, m, opt), minus, opt);
}

Rat ruzsa_distance(const GroupSubset& s, const GroupSubset& t, const EngineOptions& opt) {
    if (s.empty() || t.empty()) throw InputError("ruzsa distance: empty input");
    GroupSubset diff = sumset(s, t.negated(), opt);
    Int d(diff.cardinality());
    return Rat(d * d, Int(s.cardinality()) * Int(t.cardinality()));
}

} // namespace sumlab
