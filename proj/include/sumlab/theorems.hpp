#pragma once

#include "sumlab/sumset.hpp"

#include <optional>
#include <string>

namespace sumlab {

enum class InequalityId {
    Plunnecke,
    PlunneckeNormalized,
    RuzsaTriangle,
    CauchyDavenport,
    NBBound,
};

std::string inequality_name(InequalityId id);
std::optional<InequalityId> inequality_from_name(const std::string& name);

/// One verified inequality instance; pass <=> lhs <= rhs, slack = rhs - lhs.
struct VerificationReport {
    InequalityId id{};
    std::string group;
    std::string set_a, set_b, set_c;
    long long m = 0, n = 0;
    Rat lhs, rhs, slack;
    bool pass = false;
    /// nB bound only: false when alpha^m >= p/|A| (instance skipped, not failed).
    bool precondition_met = true;
};

/// |mB - nB| <= alpha^(m+n) |A| with alpha = |A+B| / |A|.
VerificationReport check_plunnecke(const GroupSubset& a, const GroupSubset& b, long long m,
                                   long long n, const EngineOptions& opt = {});

/// mu(mB - nB) mu(A)^(m+n-1) <= mu(A+B)^(m+n)  (alpha-free form).
VerificationReport check_plunnecke_normalized(const GroupSubset& a, const GroupSubset& b,
                                              long long m, long long n,
                                              const EngineOptions& opt = {});

/// mu(A1 - A3) mu(A2) <= mu(A1 - A2) mu(A2 - A3).
VerificationReport check_ruzsa_triangle(const GroupSubset& a1, const GroupSubset& a2,
                                        const GroupSubset& a3, const EngineOptions& opt = {});

/// |A + B| >= min(p, |A| + |B| - 1) in Z_p, p prime.
VerificationReport check_cauchy_davenport(const GroupSubset& a, const GroupSubset& b,
                                          const EngineOptions& opt = {});

/// Discrete nB corollary in Z_p: when alpha^m < p/|A|,
/// |mB| <= (alpha^m - 1) |A| + 1. The +1 is the discrete correction:
/// Cauchy-Davenport gives |X + mB| >= |X| + |mB| - 1, one below the
/// continuous form, and it propagates through the Petridis argument.
VerificationReport check_nb_bound(const GroupSubset& a, const GroupSubset& b, long long m,
                                  const EngineOptions& opt = {});

// ---------------------------------------------------------------------------
// Petridis subset selection
// ---------------------------------------------------------------------------

enum class PetridisMode { Exhaustive, LocalSearch };

struct PowerCheck {
    int m = 0;
    std::uint64_t card = 0;   // |X + mB|
    Rat bound;                // ratio^m * |X|
    bool ok = false;
};

/// Witness for the growth theorem: nonempty X of minimal (or locally
/// minimal) ratio |X+B|/|X|, with every listed power bound re-verified
/// against the computed sumsets rather than assumed.
struct PetridisCertificate {
    GroupSubset x;
    Rat ratio;
    std::vector<PowerCheck> powers;
    bool exhaustive = false;
    bool all_ok = false;
};

struct PetridisOptions {
    std::size_t exhaustive_cap = limits::kPetridisExhaustiveCap;
    unsigned threads = 1;
};

/// Exhaustive mode: global minimizer of |X+B|/|X| over nonempty X of A,
/// ties broken by smaller |X| then set-lexicographic order. LocalSearch:
/// first-improvement single-element add/remove moves restarted from A and
/// from every singleton; best fully verified local minimum wins.
PetridisCertificate petridis_select(const GroupSubset& a, const GroupSubset& b, int m_max,
                                    PetridisMode mode, const PetridisOptions& popt = {},
                                    const EngineOptions& eopt = {});

/// Builds and verifies the certificate for a caller-chosen X (used by the
/// discretization pipeline, whose starting set already satisfies the key
/// inequality). Not a minimizer claim; powers are verified as usual.
PetridisCertificate verify_certificate(const GroupSubset& x, const GroupSubset& b, int m_max,
                                       const EngineOptions& eopt = {});

// ---------------------------------------------------------------------------
// Quotient homomorphisms
// ---------------------------------------------------------------------------

/// Componentwise reduction Z_{N_i} -> Z_{M_i} with M_i | N_i; the finite
/// stand-in for the Lie-group approximation homomorphism.
class QuotientMap {
public:
    QuotientMap(GroupPtr domain, const std::vector<std::uint64_t>& target_moduli);

    const GroupPtr& domain() const { return domain_; }
    const GroupPtr& codomain() const { return codomain_; }
    std::uint64_t kernel_size() const { return domain_->order() / codomain_->order(); }

    GroupElement apply(const GroupElement& e) const;
    std::uint64_t apply_index(std::uint64_t idx) const;

    GroupSubset push_forward(const GroupSubset& s) const;
    GroupSubset preimage(const GroupSubset& s0) const;

private:
    GroupPtr domain_;
    GroupPtr codomain_;
};

struct QuotientLemmaReport {
    bool inclusion_a = false;       // A  subset of  q^-1(q(A))
    bool inclusion_b = false;
    bool sum_commutes = false;      // q(A+B) == q(A) + q(B)
    bool measure_a = false;         // mu(q^-1(S)) == mu_0(S) for S = q(A)
    bool measure_b = false;
    bool measure_sum = false;
    bool pass = false;
};

QuotientLemmaReport check_quotient_lemma(const GroupSubset& a, const GroupSubset& b,
                                         const QuotientMap& q, const EngineOptions& opt = {});

bool is_prime(std::uint64_t n);

} // namespace sumlab
