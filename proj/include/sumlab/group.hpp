#pragma once

#include "sumlab/error.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace sumlab {

/// Element of a finite abelian group, one residue per factor.
struct GroupElement {
    std::vector<std::uint64_t> coords;

    GroupElement() = default;
    explicit GroupElement(std::vector<std::uint64_t> c) : coords(std::move(c)) {}
    bool operator==(const GroupElement& o) const { return coords == o.coords; }
};

/// Finite abelian group Z_{N1} x ... x Z_{Nk} with dense mixed-radix
/// indexing: index = ((c1*N2 + c2)*N3 + c3)..., coordinate 1 most
/// significant. Immutable after construction; all methods are safe for
/// concurrent readers (the negation table is built once under a flag).
class FiniteAbelianGroup {
public:
    static std::shared_ptr<const FiniteAbelianGroup>
    make(std::vector<std::uint64_t> factors, std::uint64_t max_order = limits::kMaxGroupOrder);

    /// Parses literals like "Z8", "Z3xZ3", "z4XZ2xz5" (case-insensitive).
    static std::shared_ptr<const FiniteAbelianGroup>
    parse(const std::string& literal, std::uint64_t max_order = limits::kMaxGroupOrder);

    std::uint64_t order() const { return order_; }
    std::size_t factor_count() const { return factors_.size(); }
    const std::vector<std::uint64_t>& factors() const { return factors_; }
    std::uint64_t stride(std::size_t i) const { return strides_[i]; }

    std::uint64_t index_of(const GroupElement& e) const;
    GroupElement element_at(std::uint64_t index) const;
    GroupElement identity() const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scalar_mul(long long m, const GroupElement& a) const;

    std::uint64_t add_indices(std::uint64_t a, std::uint64_t b) const;
    /// Index remap for set negation; the permutation table is built
    /// lazily on first use and cached per group.
    std::uint64_t neg_index(std::uint64_t a) const;

    bool same_structure(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }

    /// "Z4xZ2xZ5" form, the inverse of parse().
    std::string to_string() const;

private:
    FiniteAbelianGroup(std::vector<std::uint64_t> factors, std::uint64_t order);
    void validate_element(const GroupElement& e) const;

    std::vector<std::uint64_t> factors_;
    std::vector<std::uint64_t> strides_;   // strides_[i] = prod of factors after i
    std::uint64_t order_;

    mutable std::once_flag neg_once_;
    mutable std::vector<std::uint64_t> neg_table_;
};

using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

} // namespace sumlab
