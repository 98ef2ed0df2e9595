#pragma once

#include "sumlab/subset.hpp"

namespace sumlab {

enum class Engine { Auto, Direct, Convolution };

struct EngineOptions {
    Engine engine = Engine::Auto;
    /// Auto picks the direct engine when |S|*|T| < c * order * log2(order).
    double direct_cost_factor = 1.0;
    std::uint64_t max_transform_size = limits::kMaxTransformSize;
};

/// { s + t : s in S, t in T } by translate-and-OR over the smaller operand.
GroupSubset sumset_direct(const GroupSubset& s, const GroupSubset& t);

/// Bit-identical to sumset_direct, computed as the support of the exact
/// integer convolution of the indicator vectors (NTT mod a 58-bit prime;
/// counts < 2^32 << p, so the support is recovered exactly).
GroupSubset sumset_convolution(const GroupSubset& s, const GroupSubset& t,
                               const EngineOptions& opt = {});

/// Engine-dispatching sumset.
GroupSubset sumset(const GroupSubset& s, const GroupSubset& t, const EngineOptions& opt = {});

/// mB - nB with the empty-sum convention 0B = {identity}; computed by
/// doubling (kB + lB = (k+l)B) and one negation.
GroupSubset iterated_sumset(long long m, const GroupSubset& b, long long n,
                            const EngineOptions& opt = {});

/// |S - T|^2 / (|S| |T|), the exact square of the Ruzsa distance ratio.
Rat ruzsa_distance(const GroupSubset& s, const GroupSubset& t, const EngineOptions& opt = {});

} // namespace sumlab
