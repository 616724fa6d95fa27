#pragma once

#include <cstdint>
#include <vector>

#include "removal/exponents.hpp"
#include "removal/rational.hpp"
#include "removal/triangle.hpp"

namespace removal {

enum class Role : std::uint8_t { X = 0, Y = 1, Z = 2 };

char role_letter(Role r);

// Maximal collection of pairwise point-disjoint triangles (disjoint per
// role), taken greedily in lexicographic (x, y) order.  Deleting every
// output point from the system leaves zero triangles.
MatchedTriples greedy_disjoint(const TripleSystem& sys);

/// One removal event of the degree-pruning process.
struct PruneStep {
    Role role;
    Point point;
    std::uint64_t degree_at_removal;
    Rational delta_prime_after;  // T' / N^2 after this removal
};

/// The removal trace plus the surviving system.
struct PruneTrace {
    std::vector<PruneStep> steps;
    TripleSystem final_system;
    std::uint64_t final_count;
};

// While some point sits in at least g(delta') (delta'/eps) N triangles,
// remove the highest-degree point (ties: role X before Y before Z, then
// lowest index), recount, record.
PruneTrace prune_high_degree(const TripleSystem& sys, const Rational& eps,
                             const PruneSchedule& schedule);

/// Aggregates of the random-subspace experiment.
struct SubspaceExperimentReport {
    unsigned d = 0;
    std::uint64_t trials = 0;
    std::uint64_t total_restricted = 0;  // exact sums over trials
    std::uint64_t total_good = 0;
    std::uint64_t max_good_single_trial = 0;
    double mean_restricted = 0;
    double mean_good = 0;
    double good_fraction_given_survival = 0;  // total_good / total_restricted
    double good_mean_floor = 0;                     // delta / (125 p^2 rho^2)
    double capacity = 0;                      // p^{(1-c_p) d}
};

// check_hypotheses turns on claim-audit mode: the system must satisfy the
// hypotheses the claims assume (disjoint sets, no zero vector, pairwise
// independent union, at most one triangle per plane).
SubspaceExperimentReport subspace_experiment(const TripleSystem& sys, unsigned d,
                                             std::uint64_t trials, std::uint64_t seed,
                                             unsigned threads = 1,
                                             bool check_hypotheses = false);

// Validates the hypothesis list above; throws ValidationError on the first
// violation.
void check_restriction_hypotheses(const TripleSystem& sys);

// Empirical frequency of `v` lying in a uniform d-dimensional subspace;
// expectation (p^d - 1)/(p^n - 1) for nonzero v.
double membership_frequency(const GroupParams& g, Point v, unsigned d,
                            std::uint64_t trials, std::uint64_t seed);

// Empirical frequency of `w` lying in a uniform d-dimensional subspace
// conditioned on containing span{u0, u1}; expectation
// (p^{d-2} - 1)/(p^{n-2} - 1) for w outside span{u0, u1}.
double conditional_membership_frequency(const GroupParams& g, Point u0, Point u1,
                                        Point w, unsigned d, std::uint64_t trials,
                                        std::uint64_t seed);

// Suggested experiment dimension d = floor(log(1/(5 rho)) / log p); satisfies
// 1/(5p) < rho p^d <= 1/5.  below_three is set when d < 3.
struct RestrictionDimension {
    unsigned d;
    bool below_three;
};
RestrictionDimension restriction_dimension(unsigned p, const Rational& rho);

// Counts of tensor powers k = 1..k_max; each must equal count(sys)^k.
std::vector<std::pair<unsigned, std::uint64_t>> amplification_audit(
    const TripleSystem& sys, unsigned k_max);

}  // namespace removal
