#pragma once

#include <cstdint>
#include <vector>

#include "removal/fpn.hpp"
#include "removal/rational.hpp"

namespace removal {

/// An ordered triple (x, y, z) with x + y + z = 0.
struct Triangle {
    Point x, y, z;
    bool operator==(const Triangle&) const = default;
};

/// Three point sets over a common group.
struct TripleSystem {
    GroupParams params;
    PointSet X, Y, Z;

    TripleSystem(const GroupParams& g, PointSet x, PointSet y, PointSet z);
    static TripleSystem empty(const GroupParams& g);
};

/// Exact triangle statistics: total count T, delta = T/N^2, per-point
/// degrees in each role, and rho = maxDegree/N.
struct TriangleStats {
    std::uint64_t total = 0;
    Rational delta;
    std::vector<std::uint64_t> deg_x, deg_y, deg_z;  // indexed by point
    std::uint64_t max_degree = 0;
    Rational rho;
};

/// An ordered collection of triangles; crossFreeVerified marks a
/// verified multicolored sum-free (matching) certificate.
struct MatchedTriples {
    GroupParams params;
    std::vector<Triangle> triples;
    bool cross_free_verified = false;
};

constexpr std::uint64_t kDefaultListCap = 10'000'000;

/// Counting configuration for the transform path.
struct TransformConfig {
    unsigned bit_budget = 62;
};

// Reference count: iterate x in X, y in Y, membership-test -(x+y) in Z.
std::uint64_t count_naive(const TripleSystem& sys);

// Same quantity via exact modular group convolution; equals count_naive.
std::uint64_t count_transform(const TripleSystem& sys, const TransformConfig& cfg = {});

TriangleStats degree_profile(const TripleSystem& sys);

TripleSystem restrict_to_subspace(const TripleSystem& sys, const SubspaceBasis& basis);

// Triangles whose three points each lie in exactly one triangle.
std::vector<Triangle> good_triangles(const TripleSystem& sys);

// All triangles in deterministic lexicographic (x, y) order; throws
// ListCapExceeded (with the exact count) when there are more than cap.
std::vector<Triangle> list_triangles(const TripleSystem& sys,
                                     std::uint64_t cap = kDefaultListCap);

// True iff x_i + y_j + z_k = 0 happens only at i = j = k.
bool verify_matching(const MatchedTriples& m);

// The TripleSystem on the collection's coordinate sets.
TripleSystem system_from(const MatchedTriples& m);

MatchedTriples make_matched(const GroupParams& g, std::vector<Triangle> triples);

}  // namespace removal
