#pragma once

#include "sumlab/constructible.hpp"
#include "sumlab/theorems.hpp"

namespace sumlab {

enum class CellSemantics { Exact, Outer, Inner };

/// Cell set over (1/N)Z_N^d x Z, representing the region
/// union_{cells (j,z)} ((j/N, z) + Q) with Q = [0,1/N)^d x {0_Z}.
/// Outer semantics: region contains the source set; inner: contained.
struct GridTorusSet {
    std::size_t dim = 1;
    std::uint64_t resolution = 1;                 // N, cells per torus axis
    std::vector<std::uint64_t> finite_factors;    // the Z component (may be empty)
    GroupSubset cells;
    CellSemantics semantics = CellSemantics::Exact;
    bool saturated = false;                       // thicken wrapped a full axis

    Rat measure() const { return cells.measure(); }   // |cells| / (N^d |Z|)
};

/// The cell group Z_N^d x Z_{z1} x ... as one mixed-radix group.
GroupPtr grid_group(std::size_t dim, std::uint64_t resolution,
                    const std::vector<std::uint64_t>& finite_factors);

/// Cells whose half-open cube meets C (D_A construction).
GridTorusSet outer_cells(const ConstructibleSet& c, std::uint64_t resolution);
/// Cells whose closed cube lies inside C.
GridTorusSet inner_cells(const ConstructibleSet& c, std::uint64_t resolution);

/// Depth-k pre-Cantor cell set in Z_{3^k}: indices whose ternary digits
/// avoid 1; the exact grid image of the k-th middle-thirds stage.
GridTorusSet pre_cantor_cells(unsigned depth);

/// Dilation by {-r..r}^d in cell units on the torus axes. 2r+1 >= N
/// saturates the axis and sets the warning flag instead of failing.
GridTorusSet thicken(const GridTorusSet& s, std::uint64_t radius_cells);

/// Resolution f*N; each cell splits into f^d subcells; measure unchanged.
GridTorusSet refine(const GridTorusSet& s, std::uint64_t factor,
                    std::uint64_t max_resolution = limits::kMaxGridResolution);

/// cells + {0,1}^d in cell units: the corner dilation that turns a sum of
/// half-open cube regions back into a cell set, since
/// (S+Q) + (T+Q) = (S ++ T ++ {0,1/N}^d) + Q.
GroupSubset corner_dilation(const FiniteAbelianGroup& g, std::size_t dim,
                            const GroupSubset& cells);

/// Grid sum with region semantics: cells(a) ++ cells(b) ++ {0,1}^d.
GridTorusSet grid_sum(const GridTorusSet& a, const GridTorusSet& b,
                      const EngineOptions& opt = {});

struct ConvergenceRow {
    std::uint64_t resolution;
    Rat outer_a;         // mu of the outer approximation of A
    Rat sum_estimate;    // mu of (outer A + outer B) as a region
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    Rat exact_a;         // exact mu(A)
    Rat exact_sum;       // exact mu(A+B)
};

ConvergenceReport convergence_curve(const ConstructibleSet& a, const ConstructibleSet& b,
                                    const std::vector<std::uint64_t>& resolutions,
                                    const EngineOptions& opt = {});

// ---------------------------------------------------------------------------
// Discretization pipeline
// ---------------------------------------------------------------------------

struct PipelineOptions {
    int m_max = 3;
    int max_doublings = limits::kPipelineMaxDoublings;
    std::uint64_t max_resolution = limits::kMaxGridResolution;
    std::size_t local_search_cap = 4096;
    PetridisOptions petridis;
    EngineOptions engine;
};

/// Both directions of an inclusion D + Q vs thickened set, each verified
/// by a cell-level route and an independent exact-measure route.
struct ChainChecks {
    bool lower_cells = false;     // inner(A_2n, N) subset of D
    bool lower_measure = false;   // mu(A_2n) <= |D| / N^d
    bool upper_cells = false;     // D subset of inner(A_n, N), i.e. D+Q inside A_n
    bool upper_measure = false;   // |D| / N^d <= mu(A_n)
    bool pass = false;
};

struct PerMBound {
    int m = 0;
    Rat lhs;     // |X + m(D_B ++ corners)| / N^d, an upper bound for mu(A'_n + mB)
    Rat rhs;     // (1+eps)^m alpha^m |X| / N^d
    bool ok = false;
};

struct PipelineReport {
    enum class Status { Ok, ScheduleExhausted };
    Status status = Status::Ok;

    Rat epsilon, mu_a, mu_b, mu_sum, alpha;
    std::uint64_t n_base = 0;      // first scheduled thickening parameter
    std::uint64_t n = 0;           // selected (or best attempted) n
    std::uint64_t resolution = 0;  // N = 2n
    Rat mu_an, mu_anbn;

    ChainChecks chain_a, chain_b;

    std::uint64_t key_lhs = 0;     // |D_A ++ D_B ++ corners|
    Rat key_rhs;                   // (1+eps) alpha |D_A|
    bool key_ok = false;

    PetridisCertificate certificate;   // on (X, D_B ++ corners)
    std::string certificate_source;    // "outer_cells" / "exhaustive" / "local_search"

    std::vector<PerMBound> bounds;
    bool pass = false;
};

/// Runs the full discretization argument: picks the smallest scheduled n
/// with mu(A_n) <= (1+eps) mu(A) and mu(A_n+B_n) <= (1+eps) mu(A+B),
/// builds D_A, D_B at N = 2n, verifies the inclusion chain and the key
/// counting inequality, then certifies the growth bounds on the discrete
/// sets. Throws InputError when mu(A) or mu(A+B) is zero.
PipelineReport petridis_pipeline(const ConstructibleSet& a, const ConstructibleSet& b,
                                 const Rat& epsilon, const PipelineOptions& opt = {});

} // namespace sumlab
