#pragma once

#include <optional>
#include <vector>

#include "removal/int128.hpp"
#include "removal/rational.hpp"
#include "removal/triangle.hpp"

namespace removal {

// Blow-ups are materialized as dense systems only up to this order (3^10);
// larger ones carry formula counts.
constexpr std::uint64_t kBlowupDenseCap = 59049;

// Embed x -> (x,1,0), y -> (y,-1,1), z -> (z,0,-1) into F_p^{n+2}.  Output
// coordinate sets are disjoint, pairwise independent, and no plane holds two
// triangles; the triangle count matches the input system's.
MatchedTriples lift_plus_two(const MatchedTriples& m);

// X^k, Y^k, Z^k under digit concatenation (lower-index blocks at lower
// digit positions); triangle counts multiply.
TripleSystem tensor_power_system(const TripleSystem& sys, unsigned k);

// The m^k triples indexed by k-tuples; preserves the matching property.
MatchedTriples tensor_power_matched(const MatchedTriples& m, unsigned k);

/// X' = X x F_p^l etc.; triangle count is exactly m p^{2l} and the minimum
/// deletion number is exactly m p^l.
struct BlowupResult {
    GroupParams params;                // F_p^{n+l}
    u128 triangle_count;               // m p^{2l}
    u128 min_deletion_formula;         // m p^l
    std::optional<TripleSystem> dense; // materialized when p^{n+l} <= 3^10
};

BlowupResult product_blowup(const MatchedTriples& m, unsigned l);

// Matched collection of size m in F_p^{2t} from any m distinct tags
// u_1..u_m in F_p^t: x=(u,0), y=(0,u), z=(-u,-u).  Cross sums vanish only
// when all three tags agree.
MatchedTriples diagonal_matching(unsigned p, unsigned t, std::uint64_t m);
MatchedTriples diagonal_matching_seeded(unsigned p, unsigned t, std::uint64_t m,
                                        std::uint64_t seed);

/// One row of the constructed-family frontier.
struct FamilyPoint {
    unsigned base_n;
    std::uint64_t base_m;
    unsigned k;
    unsigned n;        // base_n * k
    u128 m;            // base_m^k
    Rational epsilon;  // m / p^n
    Rational delta;    // m / p^{2n}
    double exponent;   // log delta / log epsilon = 1 + 1/(1 - log_p m / n)
};

std::vector<FamilyPoint> family_curve(const std::vector<MatchedTriples>& bases,
                                      unsigned k_max);

}  // namespace removal
