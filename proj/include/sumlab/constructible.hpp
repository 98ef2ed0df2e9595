#pragma once

#include "sumlab/bigint.hpp"
#include "sumlab/rational.hpp"

#include <cstdint>
#include <vector>

namespace sumlab {

/// Closed arc { t mod 1 : lo <= t <= lo+len } on the circle, lo in [0,1),
/// 0 <= len <= 1. len == 1 is the full circle; len == 0 a single point.
struct Arc {
    Rat lo;
    Rat len;
};

/// Product of closed arcs, one per torus axis.
struct TorusBox {
    std::vector<Arc> arcs;
};

/// Closed subset of T^d built from intervals, boxes, points, pre-Cantor
/// stages, unions, products and translates, kept in flattened form as a
/// finite union of boxes. Every derived quantity (measure, cell tests,
/// Minkowski sums) is exact rational arithmetic; that exactness is what
/// lets the discretization pipeline test its epsilon-condition without
/// any convergence-rate assumption.
class ConstructibleSet {
public:
    static ConstructibleSet empty(std::size_t dim);
    /// [a, b] on the circle; requires 0 <= b - a <= 1.
    static ConstructibleSet interval(const Rat& a, const Rat& b);
    static ConstructibleSet point(const std::vector<Rat>& coords);
    static ConstructibleSet box(const std::vector<std::pair<Rat, Rat>>& intervals);
    /// Depth-k stage of the middle-thirds construction: 2^k closed
    /// intervals of length 3^-k. cantor(0) is [0,1].
    static ConstructibleSet cantor(unsigned depth);
    static ConstructibleSet full_torus(std::size_t dim);

    static ConstructibleSet union_of(const std::vector<ConstructibleSet>& parts);
    static ConstructibleSet product(const std::vector<ConstructibleSet>& parts);
    ConstructibleSet translated(const std::vector<Rat>& by) const;

    /// Minkowski sum; exact because the sum of two finite unions of
    /// closed boxes is the union of the pairwise box sums.
    static ConstructibleSet sum(const ConstructibleSet& a, const ConstructibleSet& b);

    std::size_t dim() const { return dim_; }
    const std::vector<TorusBox>& boxes() const { return boxes_; }
    bool is_empty() const { return boxes_.empty(); }

    /// Exact Haar measure of the union.
    Rat measure() const;

    /// LCM of all arc endpoint denominators; 1 for the empty set.
    Int denominator_lcm() const;

    /// Does the half-open cube prod_i [c_i/N, (c_i+1)/N) meet the set?
    bool cell_intersects(const std::vector<std::uint64_t>& cell, std::uint64_t n) const;
    /// Is the closed cube prod_i [c_i/N, (c_i+1)/N] contained in the set?
    bool cell_contained(const std::vector<std::uint64_t>& cell, std::uint64_t n) const;

    /// Disjoint closed arcs of the union, merged on the circle. Each is
    /// (lo, hi) with 0 <= lo < 1 and lo <= hi <= lo + 1 (hi may pass 1
    /// for an arc through the wrap point). Full circle: single (0, 1).
    /// keep_points retains zero-length arcs (needed for outer cover).
    std::vector<std::pair<Rat, Rat>> merged_arcs_1d(bool keep_points) const;

private:
    ConstructibleSet(std::size_t dim, std::vector<TorusBox> boxes)
        : dim_(dim), boxes_(std::move(boxes)) {}

    std::size_t dim_ = 0;
    std::vector<TorusBox> boxes_;
};

/// Prepared repeated-query tester for cell classification; cutting the
/// boxes once and reusing them matters when classifying every cell of a
/// fine grid.
class CellTester {
public:
    struct SegBox {
        std::vector<std::pair<Rat, Rat>> segs;
    };

    explicit CellTester(const ConstructibleSet& s);
    bool intersects(const std::vector<std::uint64_t>& cell, std::uint64_t n) const;
    bool contained(const std::vector<std::uint64_t>& cell, std::uint64_t n) const;

private:
    std::size_t dim_;
    std::vector<TorusBox> boxes_;
    std::vector<SegBox> segboxes_;
};

/// floor of a rational as an Int (toward negative infinity).
Int rat_floor(const Rat& r);
/// r - floor(r), in [0, 1).
Rat rat_frac(const Rat& r);

} // namespace sumlab
