#pragma once

#include "sumlab/theorems.hpp"

namespace sumlab {

/// One scored instance from an extremal search. Masks are bit-per-index
/// subsets of the group (bit i = element index i).
struct SearchInstance {
    std::uint64_t a_mask = 0;
    std::uint64_t b_mask = 0;
    long long m = 0, n = 0;
    Rat lhs, rhs, slack;
    Rat normalized_slack;   // (rhs - lhs) / rhs
};

struct SearchOptions {
    std::uint64_t pair_budget = limits::kSearchPairBudget;
    unsigned threads = 1;
    EngineOptions engine;
};

/// Scans all nonempty pairs (A, B), ranking by ascending normalized
/// slack with (a_mask, b_mask) as the deterministic tie-break. For the
/// Ruzsa triangle the pair is read as (A1, A2, A3) = (A, B, A).
/// nb-bound instances whose precondition fails are skipped.
/// Throws LimitError when (2^|G|-1)^2 exceeds the pair budget.
std::vector<SearchInstance> exhaustive_search(const GroupPtr& g, InequalityId id, long long m,
                                              long long n, std::size_t top_k,
                                              const SearchOptions& opt = {});

/// Same ranking contract over seeded random pairs (duplicates removed);
/// deterministic in the seed.
std::vector<SearchInstance> random_search(const GroupPtr& g, InequalityId id, long long m,
                                          long long n, std::uint64_t trials, const Rat& density,
                                          std::uint64_t seed, std::size_t top_k,
                                          const SearchOptions& opt = {});

} // namespace sumlab
