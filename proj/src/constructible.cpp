#include "sumlab/constructible.hpp"

#include "sumlab/error.hpp"

#include <algorithm>

namespace sumlab {

Int rat_floor(const Rat& r) {
    Int q, rem;
    r.num().divmod(r.den(), q, rem);
    if (rem.is_negative()) q -= Int(1);   // divmod truncates toward zero
    return q;
}

Rat rat_frac(const Rat& r) { return r - Rat(rat_floor(r)); }

namespace {

Arc make_arc(const Rat& a, const Rat& b) {
    Rat len = b - a;
    if (len.is_negative() || len > Rat(1))
        throw InputError("interval: need 0 <= b - a <= 1, got length " + len.to_string());
    return Arc{rat_frac(a), len};
}

// Closed sub-segments of [0,1] realizing the arc after cutting at the
// wrap point. Zero-length segments are kept; callers that only care
// about positive measure skip them.
std::vector<std::pair<Rat, Rat>> cut_segments(const Arc& arc) {
    if (arc.len >= Rat(1)) return {{Rat(0), Rat(1)}};
    Rat hi = arc.lo + arc.len;
    if (hi <= Rat(1)) return {{arc.lo, hi}};
    return {{arc.lo, Rat(1)}, {Rat(0), hi - Rat(1)}};
}

} // namespace

ConstructibleSet ConstructibleSet::empty(std::size_t dim) {
    if (dim == 0) throw InputError("constructible set: dimension must be positive");
    return ConstructibleSet(dim, {});
}

ConstructibleSet ConstructibleSet::interval(const Rat& a, const Rat& b) {
    return ConstructibleSet(1, {TorusBox{{make_arc(a, b)}}});
}

ConstructibleSet ConstructibleSet::point(const std::vector<Rat>& coords) {
    if (coords.empty()) throw InputError("point: empty coordinate list");
    TorusBox box;
    for (const auto& c : coords) box.arcs.push_back(Arc{rat_frac(c), Rat(0)});
    return ConstructibleSet(coords.size(), {std::move(box)});
}

ConstructibleSet ConstructibleSet::box(const std::vector<std::pair<Rat, Rat>>& intervals) {
    if (intervals.empty()) throw InputError("box: empty interval list");
    TorusBox b;
    for (const auto& [lo, hi] : intervals) b.arcs.push_back(make_arc(lo, hi));
    return ConstructibleSet(intervals.size(), {std::move(b)});
}

ConstructibleSet ConstructibleSet::full_torus(std::size_t dim) {
    if (dim == 0) throw InputError("constructible set: dimension must be positive");
    TorusBox b;
    for (std::size_t i = 0; i < dim; ++i) b.arcs.push_back(Arc{Rat(0), Rat(1)});
    return ConstructibleSet(dim, {std::move(b)});
}

ConstructibleSet ConstructibleSet::cantor(unsigned depth) {
    if (depth > 24) throw LimitError("cantor: depth > 24 not supported");
    Rat width(Int(1), Int(3).pow(depth));
    std::vector<TorusBox> boxes;
    boxes.reserve(1ULL << depth);
    // starts are sums of digits {0,2} * 3^-i
    for (std::uint64_t mask = 0; mask < (1ULL << depth); ++mask) {
        Rat start(0);
        Rat scale(Int(1), Int(3));
        for (unsigned i = 0; i < depth; ++i) {
            if (mask & (1ULL << i)) start += scale * Rat(2);
            scale = scale * Rat(Int(1), Int(3));
        }
        boxes.push_back(TorusBox{{Arc{start, width}}});
    }
    return ConstructibleSet(1, std::move(boxes));
}

ConstructibleSet ConstructibleSet::union_of(const std::vector<ConstructibleSet>& parts) {
    if (parts.empty()) throw InputError("union: needs at least one part");
    std::size_t d = parts.front().dim_;
    std::vector<TorusBox> boxes;
    for (const auto& p : parts) {
        if (p.dim_ != d) throw InputError("union: mixed dimensions");
        boxes.insert(boxes.end(), p.boxes_.begin(), p.boxes_.end());
    }
    return ConstructibleSet(d, std::move(boxes));
}

ConstructibleSet ConstructibleSet::product(const std::vector<ConstructibleSet>& parts) {
    if (parts.empty()) throw InputError("product: needs at least one part");
    std::size_t d = 0;
    std::vector<TorusBox> acc{TorusBox{}};
    for (const auto& p : parts) {
        d += p.dim_;
        std::vector<TorusBox> next;
        next.reserve(acc.size() * p.boxes_.size());
        for (const auto& left : acc) {
            for (const auto& right : p.boxes_) {
                TorusBox b = left;
                b.arcs.insert(b.arcs.end(), right.arcs.begin(), right.arcs.end());
                next.push_back(std::move(b));
            }
        }
        acc = std::move(next);
    }
    return ConstructibleSet(d, std::move(acc));
}

ConstructibleSet ConstructibleSet::translated(const std::vector<Rat>& by) const {
    if (by.size() != dim_) throw InputError("translate: offset dimension mismatch");
    std::vector<TorusBox> boxes = boxes_;
    for (auto& b : boxes) {
        for (std::size_t i = 0; i < dim_; ++i) {
            b.arcs[i].lo = rat_frac(b.arcs[i].lo + by[i]);
        }
    }
    return ConstructibleSet(dim_, std::move(boxes));
}

ConstructibleSet ConstructibleSet::sum(const ConstructibleSet& a, const ConstructibleSet& b) {
    if (a.dim_ != b.dim_) throw InputError("sum: dimension mismatch");
    std::vector<TorusBox> boxes;
    boxes.reserve(a.boxes_.size() * b.boxes_.size());
    for (const auto& ba : a.boxes_) {
        for (const auto& bb : b.boxes_) {
            TorusBox s;
            s.arcs.reserve(a.dim_);
            for (std::size_t i = 0; i < a.dim_; ++i) {
                Rat len = ba.arcs[i].len + bb.arcs[i].len;
                if (len > Rat(1)) len = Rat(1);
                s.arcs.push_back(Arc{rat_frac(ba.arcs[i].lo + bb.arcs[i].lo), len});
            }
            boxes.push_back(std::move(s));
        }
    }
    return ConstructibleSet(a.dim_, std::move(boxes));
}

namespace {

using SegBox = CellTester::SegBox;

std::vector<SegBox> cut_boxes(const std::vector<TorusBox>& boxes, bool drop_degenerate) {
    std::vector<SegBox> out;
    for (const auto& b : boxes) {
        std::vector<SegBox> partial{SegBox{}};
        bool dead = false;
        for (const auto& arc : b.arcs) {
            auto segs = cut_segments(arc);
            if (drop_degenerate) {
                segs.erase(std::remove_if(segs.begin(), segs.end(),
                                          [](const auto& s) { return s.first == s.second; }),
                           segs.end());
            }
            if (segs.empty()) { dead = true; break; }
            std::vector<SegBox> next;
            next.reserve(partial.size() * segs.size());
            for (const auto& p : partial) {
                for (const auto& s : segs) {
                    SegBox q = p;
                    q.segs.push_back(s);
                    next.push_back(std::move(q));
                }
            }
            partial = std::move(next);
        }
        if (!dead)
            out.insert(out.end(), partial.begin(), partial.end());
    }
    return out;
}

// Exact measure of a union of seg-boxes by slab decomposition along the
// first remaining axis.
Rat measure_rec(const std::vector<const SegBox*>& boxes, std::size_t axis, std::size_t dim) {
    if (boxes.empty()) return Rat(0);
    if (axis == dim) return Rat(1);
    std::vector<Rat> cuts;
    for (const auto* b : boxes) {
        cuts.push_back(b->segs[axis].first);
        cuts.push_back(b->segs[axis].second);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    Rat total(0);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rat& u = cuts[i];
        const Rat& v = cuts[i + 1];
        if (!(u < v)) continue;
        std::vector<const SegBox*> active;
        for (const auto* b : boxes) {
            if (b->segs[axis].first <= u && v <= b->segs[axis].second) active.push_back(b);
        }
        if (!active.empty()) total += (v - u) * measure_rec(active, axis + 1, dim);
    }
    return total;
}

// Closed cube containment in a union of seg-boxes, by recursive splitting
// at candidate box boundaries that pass through the cube interior.
bool covers_rec(std::vector<std::pair<Rat, Rat>>& cube,
                const std::vector<const SegBox*>& boxes, int depth) {
    if (depth > 256) throw LimitError("containment test: split recursion too deep");
    std::vector<const SegBox*> cand;
    for (const auto* b : boxes) {
        bool overlap = true;
        for (std::size_t i = 0; i < cube.size(); ++i) {
            if (b->segs[i].first > cube[i].second || b->segs[i].second < cube[i].first) {
                overlap = false;
                break;
            }
        }
        if (overlap) cand.push_back(b);
    }
    if (cand.empty()) return false;
    for (const auto* b : cand) {
        bool inside = true;
        for (std::size_t i = 0; i < cube.size(); ++i) {
            if (b->segs[i].first > cube[i].first || cube[i].second > b->segs[i].second) {
                inside = false;
                break;
            }
        }
        if (inside) return true;
    }
    // split the cube at a boundary strictly inside it
    for (const auto* b : cand) {
        for (std::size_t i = 0; i < cube.size(); ++i) {
            for (const Rat& v : {b->segs[i].first, b->segs[i].second}) {
                if (cube[i].first < v && v < cube[i].second) {
                    Rat hi = cube[i].second;
                    cube[i].second = v;
                    bool left = covers_rec(cube, cand, depth + 1);
                    cube[i].second = hi;
                    if (!left) return false;
                    Rat lo = cube[i].first;
                    cube[i].first = v;
                    bool right = covers_rec(cube, cand, depth + 1);
                    cube[i].first = lo;
                    return right;
                }
            }
        }
    }
    return false;   // no candidate contains the cube and none can split it
}

} // namespace

Rat ConstructibleSet::measure() const {
    auto segboxes = cut_boxes(boxes_, /*drop_degenerate=*/true);
    std::vector<const SegBox*> ptrs;
    ptrs.reserve(segboxes.size());
    for (const auto& b : segboxes) ptrs.push_back(&b);
    return measure_rec(ptrs, 0, dim_);
}

Int ConstructibleSet::denominator_lcm() const {
    Int l(1);
    for (const auto& b : boxes_) {
        for (const auto& arc : b.arcs) {
            l = Int::lcm(l, arc.lo.den());
            l = Int::lcm(l, (arc.lo + arc.len).den());
        }
    }
    return l;
}

std::vector<std::pair<Rat, Rat>> ConstructibleSet::merged_arcs_1d(bool keep_points) const {
    if (dim_ != 1) throw InputError("merged_arcs_1d: set is not one-dimensional");
    std::vector<std::pair<Rat, Rat>> segs;
    for (const auto& b : boxes_) {
        if (b.arcs[0].len >= Rat(1)) return {{Rat(0), Rat(1)}};
        for (auto& s : cut_segments(b.arcs[0])) {
            if (!keep_points && s.first == s.second) continue;
            segs.push_back(std::move(s));
        }
    }
    if (segs.empty()) return {};
    std::sort(segs.begin(), segs.end(), [](const auto& a, const auto& b) {
        return a.first == b.first ? a.second < b.second : a.first < b.first;
    });
    std::vector<std::pair<Rat, Rat>> merged;
    for (auto& s : segs) {
        if (!merged.empty() && s.first <= merged.back().second) {
            if (s.second > merged.back().second) merged.back().second = s.second;
        } else {
            merged.push_back(std::move(s));
        }
    }
    // rejoin across the wrap point
    if (merged.size() >= 2 && merged.front().first == Rat(0) && merged.back().second == Rat(1)) {
        merged.back().second = Rat(1) + merged.front().second;
        merged.erase(merged.begin());
    }
    if (merged.size() == 1 && merged[0].second - merged[0].first >= Rat(1))
        return {{Rat(0), Rat(1)}};
    return merged;
}

CellTester::CellTester(const ConstructibleSet& s)
    : dim_(s.dim()), boxes_(s.boxes()), segboxes_(cut_boxes(s.boxes(), true)) {}

bool CellTester::intersects(const std::vector<std::uint64_t>& cell, std::uint64_t n) const {
    if (cell.size() != dim_) throw InputError("cell test: dimension mismatch");
    Rat inv(Int(1), Int(n));
    for (const auto& b : boxes_) {
        bool all = true;
        for (std::size_t i = 0; i < dim_ && all; ++i) {
            const Arc& arc = b.arcs[i];
            if (arc.len >= Rat(1)) continue;
            Rat c = Rat(Int(cell[i])) * inv;
            Rat d = Rat(Int(cell[i] + 1)) * inv;
            Rat hi = arc.lo + arc.len;
            bool hit = false;
            for (int k = 0; k <= 1 && !hit; ++k) {
                Rat ck = c + Rat(k);
                Rat dk = d + Rat(k);
                const Rat& start = arc.lo > ck ? arc.lo : ck;
                if (start <= hi && start < dk) hit = true;
            }
            all = hit;
        }
        if (all) return true;
    }
    return false;
}

bool CellTester::contained(const std::vector<std::uint64_t>& cell, std::uint64_t n) const {
    if (cell.size() != dim_) throw InputError("cell test: dimension mismatch");
    std::vector<const SegBox*> ptrs;
    ptrs.reserve(segboxes_.size());
    for (const auto& b : segboxes_) ptrs.push_back(&b);
    Rat inv(Int(1), Int(n));
    std::vector<std::pair<Rat, Rat>> cube;
    cube.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        cube.emplace_back(Rat(Int(cell[i])) * inv, Rat(Int(cell[i] + 1)) * inv);
    }
    return covers_rec(cube, ptrs, 0);
}

bool ConstructibleSet::cell_intersects(const std::vector<std::uint64_t>& cell,
                                       std::uint64_t n) const {
    return CellTester(*this).intersects(cell, n);
}

bool ConstructibleSet::cell_contained(const std::vector<std::uint64_t>& cell,
                                      std::uint64_t n) const {
    return CellTester(*this).contained(cell, n);
}

} // namespace sumlab
