// Acceptance suite: one line per criterion, exact checks, wall-clock
// budgets where stated. Exit code = number of failed criteria.

#include "sumlab/grid.hpp"
#include "sumlab/rng.hpp"
#include "sumlab/search.hpp"
#include "sumlab/set_json.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace sumlab;

namespace {

int failed = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = budget_seconds <= 0 || secs < budget_seconds;
    bool pass = ok && in_budget;
    if (!pass) ++failed;
    std::printf("[%s] criterion %d: %s (%.2fs%s)%s%s\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), secs, budget_seconds > 0 && !in_budget ? ", OVER BUDGET" : "",
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

Rat r(long long p, long long q) { return Rat(Int(p), Int(q)); }

GroupSubset from_mask(const GroupPtr& g, std::uint64_t mask) {
    GroupSubset s(g);
    for (std::uint64_t i = 0; i < g->order(); ++i)
        if (mask & (1ULL << i)) s.insert(i);
    return s;
}

// independent oracle: pairwise enumeration, no engine code
GroupSubset naive_sum(const GroupSubset& s, const GroupSubset& t) {
    GroupSubset out(s.group());
    for (auto a : s.indices())
        for (auto b : t.indices()) out.insert(s.group()->add_indices(a, b));
    return out;
}

// independent Petridis ratio minimizer over all nonempty subsets
Rat naive_min_ratio(const GroupSubset& a, const GroupSubset& b) {
    auto elems = a.indices();
    std::uint64_t best_s = 0, best_c = 0;
    for (std::uint64_t mask = 1; mask < (1ULL << elems.size()); ++mask) {
        GroupSubset x(a.group());
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (mask & (1ULL << i)) x.insert(elems[i]);
        std::uint64_t s = naive_sum(x, b).cardinality();
        std::uint64_t c = x.cardinality();
        if (best_c == 0 || static_cast<unsigned __int128>(s) * best_c <
                               static_cast<unsigned __int128>(best_s) * c) {
            best_s = s;
            best_c = c;
        }
    }
    return Rat(Int(best_s), Int(best_c));
}

ConstructibleSet random_interval_union(Xoshiro256StarStar& rng, int max_parts,
                                       long long max_den) {
    std::vector<ConstructibleSet> parts;
    int k = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(max_parts)));
    for (int i = 0; i < k; ++i) {
        long long q = 2 + static_cast<long long>(
                              rng.uniform_below(static_cast<std::uint64_t>(max_den - 1)));
        long long a = static_cast<long long>(rng.uniform_below(static_cast<std::uint64_t>(q)));
        long long b =
            a + 1 + static_cast<long long>(rng.uniform_below(static_cast<std::uint64_t>(q - a)));
        parts.push_back(ConstructibleSet::interval(r(a, q), r(b, q)));
    }
    return ConstructibleSet::union_of(parts);
}

bool criterion_cantor(std::string& detail) {
    for (unsigned k = 1; k <= 5; ++k) {
        GridTorusSet grid = pre_cantor_cells(k);
        const GroupSubset& b = grid.cells;
        if (grid.measure() != Rat(Int(2).pow(k), Int(3).pow(k))) {
            detail = "mu(B) wrong at k=" + std::to_string(k);
            return false;
        }
        for (int total = 2; total <= 4; ++total) {
            for (int m = total; m >= 0; --m) {
                int n = total - m;
                if (iterated_sumset(m, b, n).measure() != Rat(1)) {
                    detail = "mu(" + std::to_string(m) + "B-" + std::to_string(n) +
                             "B) != 1 at k=" + std::to_string(k);
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_plunnecke_exhaustive(std::string& detail) {
    auto g = FiniteAbelianGroup::make({8});
    for (std::uint64_t am = 1; am < 256; ++am) {
        GroupSubset a = from_mask(g, am);
        for (std::uint64_t bm = 1; bm < 256; ++bm) {
            GroupSubset b = from_mask(g, bm);
            for (long long m = 0; m <= 2; ++m) {
                for (long long n = 0; n <= 2; ++n) {
                    if (!check_plunnecke(a, b, m, n).pass) {
                        detail = "plunnecke violated at A=0x" + std::to_string(am) + " B=0x" +
                                 std::to_string(bm);
                        return false;
                    }
                    if (!check_plunnecke_normalized(a, b, m, n).pass) {
                        detail = "normalized form violated at A=0x" + std::to_string(am) +
                                 " B=0x" + std::to_string(bm);
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool criterion_ruzsa_exhaustive(std::string& detail) {
    auto g = FiniteAbelianGroup::make({6});
    std::vector<GroupSubset> sets;
    sets.reserve(63);
    for (std::uint64_t m = 1; m < 64; ++m) sets.push_back(from_mask(g, m));
    for (const auto& a1 : sets) {
        for (const auto& a2 : sets) {
            for (const auto& a3 : sets) {
                if (!check_ruzsa_triangle(a1, a2, a3).pass) {
                    detail = "ruzsa triangle violated";
                    return false;
                }
            }
        }
    }
    return true;
}

// Exhaustive Z_11 scan. Sumset cardinalities come from the library
// engine; the comparisons are the integer forms of the two bounds
// (everything here is below 11^3, so u64 arithmetic is exact):
//   CD:  |A+B| >= min(11, |A|+|B|-1)
//   nB:  alpha^m < p/|A|  <=>  sab^m * |A| < p * |A|^m
//        |mB| <= (alpha^m - 1)|A| + 1  <=>  (|mB|-1) |A|^(m-1) <= sab^m - |A|^m
// Every 97th pair additionally runs the full report-building checkers
// and must agree with the inline verdicts.
bool criterion_cauchy_davenport(std::string& detail) {
    const std::uint64_t p = 11;
    auto g = FiniteAbelianGroup::make({p});

    std::vector<GroupSubset> sets;
    std::vector<std::uint64_t> mb_card[4];   // mb_card[m][bm-1] = |mB|
    sets.reserve(2047);
    for (std::uint64_t bm = 1; bm < 2048; ++bm) {
        sets.push_back(from_mask(g, bm));
        const GroupSubset& b = sets.back();
        for (int m = 1; m <= 3; ++m)
            mb_card[m].push_back(iterated_sumset(m, b, 0).cardinality());
    }

    std::uint64_t pair_index = 0;
    for (std::uint64_t am = 1; am < 2048; ++am) {
        const GroupSubset& a = sets[am - 1];
        std::uint64_t ca = a.cardinality();
        for (std::uint64_t bm = 1; bm < 2048; ++bm) {
            const GroupSubset& b = sets[bm - 1];
            std::uint64_t sab = sumset(a, b).cardinality();

            bool cd_ok = sab >= std::min(p, ca + b.cardinality() - 1);
            if (!cd_ok) {
                detail = "cauchy-davenport violated at A=0x" + std::to_string(am);
                return false;
            }

            std::uint64_t sab_m = 1, ca_m = 1;
            for (int m = 1; m <= 3; ++m) {
                sab_m *= sab;
                std::uint64_t ca_m1 = ca_m;   // |A|^(m-1)
                ca_m *= ca;
                bool applicable = sab_m * ca < p * ca_m;
                if (applicable &&
                    (mb_card[m][bm - 1] - 1) * ca_m1 > sab_m - ca_m) {
                    detail = "nB bound violated at m=" + std::to_string(m);
                    return false;
                }
                if (pair_index % 97 == 0) {
                    auto rep = check_nb_bound(a, b, m);
                    if (rep.precondition_met != applicable ||
                        (rep.precondition_met && !rep.pass)) {
                        detail = "check_nb_bound disagrees with inline verdict";
                        return false;
                    }
                }
            }
            if (pair_index % 97 == 0 && !check_cauchy_davenport(a, b).pass) {
                detail = "check_cauchy_davenport disagrees with inline verdict";
                return false;
            }
            ++pair_index;
        }
    }
    return true;
}

bool criterion_petridis(std::string& detail) {
    auto g = FiniteAbelianGroup::make({12});
    Xoshiro256StarStar rng(1234);
    int done = 0;
    while (done < 500) {
        auto a = GroupSubset::random(g, r(1, 2), rng.next());
        auto b = GroupSubset::random(g, r(1, 3), rng.next());
        if (a.empty() || a.cardinality() > 8 || b.empty()) continue;
        ++done;
        auto cert = petridis_select(a, b, 4, PetridisMode::Exhaustive);
        if (!cert.all_ok) {
            detail = "certificate power check failed at instance " + std::to_string(done);
            return false;
        }
        if (cert.ratio != naive_min_ratio(a, b)) {
            detail = "ratio differs from brute-force minimizer at instance " +
                     std::to_string(done);
            return false;
        }
    }
    return true;
}

bool criterion_engines(std::string& detail) {
    const Rat densities[] = {r(1, 512), r(1, 64), r(1, 8), r(1, 2), r(9, 10)};
    {
        auto g = FiniteAbelianGroup::make({4096});
        Xoshiro256StarStar rng(777);
        for (int i = 0; i < 1000; ++i) {
            const Rat& d = densities[i % 5];
            auto s = GroupSubset::random(g, d, rng.next());
            auto t = GroupSubset::random(g, d, rng.next());
            if (!(sumset_direct(s, t) == sumset_convolution(s, t))) {
                detail = "engine mismatch in Z4096 at pair " + std::to_string(i);
                return false;
            }
        }
    }
    {
        auto g = FiniteAbelianGroup::make({64, 64});
        Xoshiro256StarStar rng(778);
        for (int i = 0; i < 200; ++i) {
            const Rat& d = densities[i % 5];
            auto s = GroupSubset::random(g, d, rng.next());
            auto t = GroupSubset::random(g, d, rng.next());
            if (!(sumset_direct(s, t) == sumset_convolution(s, t))) {
                detail = "engine mismatch in Z64xZ64 at pair " + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

bool criterion_quotient(std::string& detail) {
    struct Case {
        std::vector<std::uint64_t> domain, target;
    };
    for (const Case& c : {Case{{12}, {4}}, Case{{4, 2}, {2, 2}}}) {
        auto g = FiniteAbelianGroup::make(c.domain);
        QuotientMap q(g, c.target);
        std::uint64_t m0 = q.codomain()->order();
        for (std::uint64_t mask = 0; mask < (1ULL << m0); ++mask) {
            GroupSubset s0(q.codomain());
            for (std::uint64_t i = 0; i < m0; ++i)
                if (mask & (1ULL << i)) s0.insert(i);
            if (!(q.preimage(s0).measure() == s0.measure())) {
                detail = "measure preservation failed for subset mask " + std::to_string(mask);
                return false;
            }
        }
        Xoshiro256StarStar rng(99);
        for (int i = 0; i < 200; ++i) {
            auto a = GroupSubset::random(g, r(1, 2), rng.next());
            auto b = GroupSubset::random(g, r(1, 2), rng.next());
            auto rep = check_quotient_lemma(a, b, q);
            if (!rep.inclusion_a || !rep.inclusion_b || !rep.sum_commutes) {
                detail = "lemma checks failed at trial " + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

bool criterion_pipeline(std::string& detail) {
    Xoshiro256StarStar rng(2026);
    int done = 0;
    while (done < 100) {
        auto a = random_interval_union(rng, 4, 16);
        auto b = random_interval_union(rng, 4, 16);
        Int lcm = Int::lcm(a.denominator_lcm(), b.denominator_lcm());
        if (lcm > Int(5000)) continue;   // keep scheduled resolutions desk-scale
        ++done;
        PipelineOptions opt;
        opt.m_max = 3;
        auto rep = petridis_pipeline(a, b, r(1, 10), opt);
        if (rep.status != PipelineReport::Status::Ok) {
            detail = "schedule exhausted at instance " + std::to_string(done);
            return false;
        }
        if (!rep.chain_a.pass || !rep.chain_b.pass) {
            detail = "inclusion chain failed at instance " + std::to_string(done);
            return false;
        }
        if (!rep.key_ok) {
            detail = "key inequality failed at instance " + std::to_string(done);
            return false;
        }
        if (!rep.certificate.all_ok || rep.bounds.size() != 3) {
            detail = "certificate failed at instance " + std::to_string(done);
            return false;
        }
        for (const auto& pb : rep.bounds) {
            if (!pb.ok) {
                detail = "per-m bound failed at m=" + std::to_string(pb.m);
                return false;
            }
        }
    }
    return true;
}

bool criterion_convergence(std::string& detail) {
    auto check_chain = [&detail](const ConstructibleSet& a, const ConstructibleSet& b,
                                 std::uint64_t base) {
        auto rep = convergence_curve(a, b, {base, 2 * base, 4 * base, 8 * base});
        for (std::size_t i = 0; i < rep.rows.size(); ++i) {
            if (rep.rows[i].outer_a < rep.exact_a || rep.rows[i].sum_estimate < rep.exact_sum) {
                detail = "outer column dipped below the exact measure";
                return false;
            }
            if (i > 0 && (rep.rows[i].outer_a > rep.rows[i - 1].outer_a ||
                          rep.rows[i].sum_estimate > rep.rows[i - 1].sum_estimate)) {
                detail = "outer column increased along the refinement chain";
                return false;
            }
        }
        // grid-aligned at the finest resolution: inner-based sum is exact
        std::uint64_t fine = 8 * base;
        auto gsum = grid_sum(inner_cells(a, fine), inner_cells(b, fine));
        if (gsum.measure() != rep.exact_sum) {
            detail = "grid sum measure != exact sumset measure at N=" + std::to_string(fine);
            return false;
        }
        return true;
    };

    auto c3 = ConstructibleSet::cantor(3);
    if (!check_chain(c3, c3, 27)) return false;

    Xoshiro256StarStar rng(31337);
    for (int i = 0; i < 20; ++i) {
        auto a = random_interval_union(rng, 4, 16);
        auto b = random_interval_union(rng, 4, 16);
        Int lcm = Int::lcm(a.denominator_lcm(), b.denominator_lcm());
        if (lcm > Int(512)) { --i; continue; }
        if (!check_chain(a, b, lcm.to_u64())) return false;
    }
    return true;
}

bool criterion_performance(std::string& detail) {
    {
        auto g = FiniteAbelianGroup::make({1ULL << 20});
        auto s = GroupSubset::random(g, r(1, 3), 1);
        auto t = GroupSubset::random(g, r(1, 3), 2);
        auto t0 = std::chrono::steady_clock::now();
        auto conv = sumset_convolution(s, t);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= 5.0) {
            detail = "Z_2^20 convolution took " + std::to_string(secs) + "s (budget 5s)";
            return false;
        }
        if (conv.cardinality() != g->order()) {
            // density 1/3 saturates the group; anything else means a bug
            detail = "Z_2^20 convolution produced an implausible support";
            return false;
        }
    }
    {
        auto g = FiniteAbelianGroup::make({24});
        Xoshiro256StarStar rng(5);
        GroupSubset a(g);
        while (a.cardinality() != 16) {
            a = GroupSubset::random(g, r(2, 3), rng.next());
        }
        auto b = GroupSubset::random(g, r(1, 4), 6);
        if (b.empty()) b = GroupSubset::from_indices(g, {0, 1});
        auto t0 = std::chrono::steady_clock::now();
        PetridisOptions popt;
        popt.exhaustive_cap = 16;
        auto cert = petridis_select(a, b, 3, PetridisMode::Exhaustive, popt);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= 600.0) {
            detail = "exhaustive petridis |A|=16 took " + std::to_string(secs) + "s";
            return false;
        }
        if (!cert.all_ok) {
            detail = "exhaustive petridis certificate failed";
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "cantor demo exactness, k = 1..5", 10.0, criterion_cantor);
    criterion(2, "finite plunnecke-ruzsa soundness, exhaustive Z8", 120.0,
              criterion_plunnecke_exhaustive);
    criterion(3, "ruzsa triangle soundness, exhaustive Z6 triples", 60.0,
              criterion_ruzsa_exhaustive);
    criterion(4, "cauchy-davenport and discrete nB bound, exhaustive Z11", 120.0,
              criterion_cauchy_davenport);
    criterion(5, "petridis certificates vs brute force, 500 instances in Z12", 300.0,
              criterion_petridis);
    criterion(6, "engine equivalence, Z4096 and Z64xZ64", 60.0, criterion_engines);
    criterion(7, "quotient lemma, exhaustive measures plus 200 random pairs", 0.0,
              criterion_quotient);
    criterion(8, "pipeline chain on 100 random interval unions", 0.0, criterion_pipeline);
    criterion(9, "convergence monotonicity and grid-exact sums", 0.0, criterion_convergence);
    criterion(10, "performance: Z_2^20 convolution, petridis |A|=16 in Z24", 0.0,
              criterion_performance);

    if (failed) std::printf("%d criterion(s) FAILED\n", failed);
    else std::printf("all acceptance criteria passed\n");
    return failed;
}
