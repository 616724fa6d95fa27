#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "removal/fpn.hpp"
#include "removal/procedures.hpp"
#include "removal/rng.hpp"

using namespace removal;

namespace {

Point pt(const GroupParams& g, std::initializer_list<unsigned> digits) {
    Point a = 0;
    unsigned i = 0;
    for (unsigned d : digits) a += g.pow_p(i++) * d;
    return a;
}

// Oracle: enumerate every 2-dimensional subspace of g as a sorted point set
// by brute force over independent pairs.
std::set<std::vector<Point>> all_planes_brute(const GroupParams& g) {
    std::set<std::vector<Point>> planes;
    for (Point u = 1; u < g.order(); ++u) {
        for (Point v = 1; v < g.order(); ++v) {
            if (!pairwise_independent(g, u, v)) continue;
            std::vector<Point> span;
            for (unsigned a = 0; a < g.p(); ++a)
                for (unsigned b = 0; b < g.p(); ++b)
                    span.push_back(g.add(g.scale(a, u), g.scale(b, v)));
            std::sort(span.begin(), span.end());
            span.erase(std::unique(span.begin(), span.end()), span.end());
            planes.insert(span);
        }
    }
    return planes;
}

// Gaussian binomial [n choose 2]_p computed directly.
std::uint64_t gaussian_binomial_2(unsigned p, unsigned n) {
    auto powu = [&](unsigned e) {
        std::uint64_t r = 1;
        for (unsigned i = 0; i < e; ++i) r *= p;
        return r;
    };
    return (powu(n) - 1) * (powu(n - 1) - 1) / ((powu(2) - 1) * (p - 1));
}

}  // namespace

TEST_CASE("group params validation") {
    CHECK_THROWS_AS(GroupParams(4, 2), ValidationError);
    CHECK_THROWS_AS(GroupParams(1, 2), ValidationError);
    CHECK_THROWS_AS(GroupParams(19, 2), ValidationError);
    CHECK_THROWS_AS(GroupParams(2, 63), ValidationError);
    CHECK_THROWS_AS(GroupParams(3, 40), ValidationError);
    GroupParams g(3, 2);
    CHECK(g.order() == 9);
    GroupParams g0(5, 0);
    CHECK(g0.order() == 1);
}

TEST_CASE("digitwise add and neg") {
    GroupParams g3(3, 2);
    CHECK(add_points(g3, pt(g3, {1, 2}), pt(g3, {2, 2})) == pt(g3, {0, 1}));
    CHECK(negate_point(g3, pt(g3, {1, 2})) == pt(g3, {2, 1}));
    CHECK(negate_point(g3, 0) == 0);

    GroupParams g2(2, 3);
    CHECK(add_points(g2, pt(g2, {1, 0, 1}), pt(g2, {1, 1, 0})) == pt(g2, {0, 1, 1}));
    for (Point u = 0; u < g2.order(); ++u) {
        CHECK(add_points(g2, u, 0) == u);
        CHECK(negate_point(g2, u) == u);  // self-inverse in F_2
    }
    CHECK_THROWS_AS(add_points(g2, 8, 0), ValidationError);
    CHECK_THROWS_AS(negate_point(g2, 99), ValidationError);
}

TEST_CASE("group laws hold exhaustively on small groups") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 3}, {3, 2}, {5, 1}, {7, 1}}) {
        GroupParams g(p, n);
        for (Point u = 0; u < g.order(); ++u) {
            CHECK(g.add(u, g.neg(u)) == 0);
            for (Point v = 0; v < g.order(); ++v) {
                CHECK(g.add(u, v) == g.add(v, u));
                for (Point w = 0; w < g.order(); ++w)
                    CHECK(g.add(g.add(u, v), w) == g.add(u, g.add(v, w)));
            }
        }
    }
}

TEST_CASE("digit round trip") {
    GroupParams g(5, 3);
    for (Point a = 0; a < g.order(); ++a) CHECK(g.from_digits(g.to_digits(a)) == a);
}

TEST_CASE("pairwise independence") {
    GroupParams g2(2, 2);
    CHECK(pairwise_independent(g2, pt(g2, {1, 0}), pt(g2, {0, 1})));
    GroupParams g3(3, 2);
    CHECK_FALSE(pairwise_independent(g3, pt(g3, {1, 2}), pt(g3, {2, 1})));  // 2*(1,2)
    CHECK_FALSE(pairwise_independent(g3, 0, pt(g3, {1, 1})));
    CHECK_FALSE(pairwise_independent(g3, pt(g3, {1, 1}), 0));
}

TEST_CASE("subspace sampling endpoints") {
    GroupParams g(3, 3);
    SubspaceBasis zero = sample_subspace(g, 0, 7);
    PointSet s0 = enumerate_subspace(zero);
    CHECK(s0.size() == 1);
    CHECK(s0.contains(0));

    SubspaceBasis whole = sample_subspace(g, 3, 7);
    CHECK(enumerate_subspace(whole).size() == g.order());

    CHECK_THROWS_AS(sample_subspace(g, 4, 7), ValidationError);
}

TEST_CASE("subspace sampling is deterministic given seed") {
    GroupParams g(2, 5);
    SubspaceBasis a = sample_subspace(g, 3, 12345);
    SubspaceBasis b = sample_subspace(g, 3, 12345);
    CHECK(a.basis == b.basis);
}

TEST_CASE("planes of F_2^3: oracle count and membership probability") {
    GroupParams g(2, 3);
    auto planes = all_planes_brute(g);
    CHECK(planes.size() == 7);  // Fano plane count

    // every fixed nonzero vector lies in exactly 3 of the 7 planes
    const Point fixed = 1;
    std::size_t containing = 0;
    for (const auto& span : planes)
        if (std::binary_search(span.begin(), span.end(), fixed)) ++containing;
    CHECK(containing == 3);

    // Monte Carlo over >= 1e5 seeds within 3 standard errors of 3/7
    const std::uint64_t trials = 100000;
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SubspaceBasis u = sample_subspace(g, 2, derive_seed(99, t));
        if (enumerate_subspace(u).contains(fixed)) ++hits;
    }
    const double q = 3.0 / 7.0;
    const double se = std::sqrt(q * (1 - q) / trials);
    CHECK(std::abs(static_cast<double>(hits) / trials - q) < 3 * se);
}

TEST_CASE("enumerated subspaces are closed under addition with exact size") {
    for (auto [p, n, d] : {std::tuple<unsigned, unsigned, unsigned>{2, 4, 2},
                           {3, 3, 2},
                           {5, 2, 1}}) {
        GroupParams g(p, n);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            SubspaceBasis b = sample_subspace(g, d, seed);
            PointSet s = enumerate_subspace(b);
            std::uint64_t expect = 1;
            for (unsigned i = 0; i < d; ++i) expect *= p;
            CHECK(s.size() == expect);
            auto mem = s.members();
            for (Point u : mem)
                for (Point v : mem) CHECK(s.contains(g.add(u, v)));
        }
    }
}

TEST_CASE("enumerate_subspace rejects dependent rows") {
    GroupParams g(2, 3);
    SubspaceBasis bad{g, 2, {3, 3}};
    CHECK_THROWS_AS(enumerate_subspace(bad), ValidationError);
}

TEST_CASE("canonical plane ids") {
    GroupParams g(2, 3);
    Point u = pt(g, {1, 0, 1}), v = pt(g, {0, 1, 1});
    CHECK(canonical_plane_id(g, u, v) == canonical_plane_id(g, v, u));
    CHECK(canonical_plane_id(g, u, v) == canonical_plane_id(g, u, g.add(u, v)));
    CHECK_THROWS_AS(canonical_plane_id(g, u, u), ValidationError);

    // distinct ids across all independent pairs = Gaussian binomial [n 2]_p,
    // and the classes partition the pairs evenly
    for (unsigned n : {3u, 4u}) {
        GroupParams gn(2, n);
        std::map<PlaneId, std::uint64_t> classes;
        for (Point a = 1; a < gn.order(); ++a)
            for (Point b = 1; b < gn.order(); ++b)
                if (pairwise_independent(gn, a, b)) ++classes[canonical_plane_id(gn, a, b)];
        CHECK(classes.size() == gaussian_binomial_2(2, n));
        // ordered independent pairs inside one plane: (p^2-1)(p^2-p)
        for (const auto& [id, size] : classes) CHECK(size == 6);
    }
    GroupParams g32(3, 2);
    std::set<PlaneId> ids;
    for (Point a = 1; a < g32.order(); ++a)
        for (Point b = 1; b < g32.order(); ++b)
            if (pairwise_independent(g32, a, b)) ids.insert(canonical_plane_id(g32, a, b));
    CHECK(ids.size() == gaussian_binomial_2(3, 2));  // = 1, the whole plane
}

TEST_CASE("membership frequency matches (p^d-1)/(p^n-1) for several shapes") {
    // cheaper sanity companion to the 3/7 case: p=3, n=3, d=2
    GroupParams g(3, 3);
    const double expect = (9.0 - 1.0) / (27.0 - 1.0);
    const std::uint64_t trials = 20000;
    double freq = membership_frequency(g, 5, 2, trials, 4242);
    const double se = std::sqrt(expect * (1 - expect) / trials);
    CHECK(std::abs(freq - expect) < 3 * se);
}

TEST_CASE("point set basics") {
    GroupParams g(2, 3);
    PointSet s(g);
    CHECK(s.size() == 0);
    s.insert(3);
    s.insert(3);
    s.insert(5);
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    s.erase(3);
    CHECK_FALSE(s.contains(3));
    CHECK(s.size() == 1);
    CHECK(PointSet::full(g).size() == 8);
    CHECK_THROWS_AS(s.insert(8), ValidationError);
}
