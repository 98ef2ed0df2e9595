#include "sumlab/search.hpp"

#include "sumlab/rng.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

namespace sumlab {

namespace {

GroupSubset from_mask(const GroupPtr& g, std::uint64_t mask) {
    GroupSubset s(g);
    for (std::uint64_t i = 0; i < g->order(); ++i) {
        if (mask & (1ULL << i)) s.insert(i);
    }
    return s;
}

std::optional<SearchInstance> evaluate(const GroupPtr& g, InequalityId id, std::uint64_t a_mask,
                                       std::uint64_t b_mask, long long m, long long n,
                                       const EngineOptions& eopt) {
    GroupSubset a = from_mask(g, a_mask);
    GroupSubset b = from_mask(g, b_mask);
    VerificationReport rep;
    switch (id) {
        case InequalityId::Plunnecke: rep = check_plunnecke(a, b, m, n, eopt); break;
        case InequalityId::PlunneckeNormalized:
            rep = check_plunnecke_normalized(a, b, m, n, eopt);
            break;
        case InequalityId::RuzsaTriangle: rep = check_ruzsa_triangle(a, b, a, eopt); break;
        case InequalityId::CauchyDavenport: rep = check_cauchy_davenport(a, b, eopt); break;
        case InequalityId::NBBound: rep = check_nb_bound(a, b, std::max(1LL, m), eopt); break;
    }
    if (!rep.precondition_met) return std::nullopt;
    SearchInstance inst;
    inst.a_mask = a_mask;
    inst.b_mask = b_mask;
    inst.m = rep.m;
    inst.n = rep.n;
    inst.lhs = rep.lhs;
    inst.rhs = rep.rhs;
    inst.slack = rep.slack;
    inst.normalized_slack = rep.rhs.is_zero() ? rep.slack : rep.slack / rep.rhs;
    return inst;
}

bool rank_less(const SearchInstance& x, const SearchInstance& y) {
    int c = Rat::cmp(x.normalized_slack, y.normalized_slack);
    if (c != 0) return c < 0;
    if (x.a_mask != y.a_mask) return x.a_mask < y.a_mask;
    return x.b_mask < y.b_mask;
}

void keep_top(std::vector<SearchInstance>& ranked, SearchInstance inst, std::size_t top_k) {
    auto pos = std::lower_bound(ranked.begin(), ranked.end(), inst, rank_less);
    ranked.insert(pos, std::move(inst));
    if (ranked.size() > top_k) ranked.pop_back();
}

} // namespace

std::vector<SearchInstance> exhaustive_search(const GroupPtr& g, InequalityId id, long long m,
                                              long long n, std::size_t top_k,
                                              const SearchOptions& opt) {
    if (top_k == 0) throw InputError("search: top_k must be positive");
    std::uint64_t order = g->order();
    if (order >= 32) throw LimitError("search: group order " + std::to_string(order) +
                                      " too large for subset enumeration");
    std::uint64_t subsets = (1ULL << order) - 1;
    if (subsets > opt.pair_budget / subsets)
        throw LimitError("search: pair count " + std::to_string(subsets) + "^2 exceeds budget " +
                         std::to_string(opt.pair_budget));

    unsigned nthreads = std::max(1u, opt.threads);
    std::vector<std::vector<SearchInstance>> partial(nthreads);
    std::atomic<std::uint64_t> next_a{1};

    auto worker = [&](unsigned w) {
        auto& ranked = partial[w];
        for (;;) {
            std::uint64_t a_mask = next_a.fetch_add(1);
            if (a_mask > subsets) return;
            for (std::uint64_t b_mask = 1; b_mask <= subsets; ++b_mask) {
                auto inst = evaluate(g, id, a_mask, b_mask, m, n, opt.engine);
                if (inst) keep_top(ranked, std::move(*inst), top_k);
            }
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    // deterministic merge regardless of how work was split
    std::vector<SearchInstance> merged;
    for (auto& p : partial)
        for (auto& inst : p) keep_top(merged, std::move(inst), top_k);
    return merged;
}

std::vector<SearchInstance> random_search(const GroupPtr& g, InequalityId id, long long m,
                                          long long n, std::uint64_t trials, const Rat& density,
                                          std::uint64_t seed, std::size_t top_k,
                                          const SearchOptions& opt) {
    if (trials == 0) throw InputError("search: trials must be positive");
    if (top_k == 0) throw InputError("search: top_k must be positive");
    if (g->order() >= 32)
        throw LimitError("search: group order too large for mask-based search");

    Xoshiro256StarStar rng(seed);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto a = GroupSubset::random(g, density, rng.next());
        auto b = GroupSubset::random(g, density, rng.next());
        if (a.empty() || b.empty()) continue;
        pairs.emplace_back(a.bits().word(0), b.bits().word(0));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    std::vector<SearchInstance> ranked;
    for (auto [a_mask, b_mask] : pairs) {
        auto inst = evaluate(g, id, a_mask, b_mask, m, n, opt.engine);
        if (inst) keep_top(ranked, std::move(*inst), top_k);
    }
    return ranked;
}

} // namespace sumlab
