#include <doctest.h>

#include <algorithm>
#include <map>
#include <tuple>

#include "removal/constructions.hpp"
#include "removal/generate.hpp"
#include "removal/rng.hpp"
#include "removal/transform.hpp"
#include "removal/triangle.hpp"

using namespace removal;

namespace {

TripleSystem from_lists(const GroupParams& g, std::vector<Point> xs, std::vector<Point> ys,
                        std::vector<Point> zs) {
    PointSet X(g), Y(g), Z(g);
    for (Point a : xs) X.insert(a);
    for (Point a : ys) Y.insert(a);
    for (Point a : zs) Z.insert(a);
    return TripleSystem(g, std::move(X), std::move(Y), std::move(Z));
}

// Independent recount used as the degree oracle: walk every (x, y, z)
// membership triple directly.
std::map<std::pair<char, Point>, std::uint64_t> brute_degrees(const TripleSystem& sys) {
    std::map<std::pair<char, Point>, std::uint64_t> deg;
    const GroupParams& g = sys.params;
    for (Point x : sys.X.members())
        for (Point y : sys.Y.members()) {
            Point z = g.neg(g.add(x, y));
            if (sys.Z.contains(z)) {
                ++deg[{'x', x}];
                ++deg[{'y', y}];
                ++deg[{'z', z}];
            }
        }
    return deg;
}

}  // namespace

TEST_CASE("count_naive anchors") {
    GroupParams g22(2, 2);
    TripleSystem full(g22, PointSet::full(g22), PointSet::full(g22), PointSet::full(g22));
    CHECK(count_naive(full) == 16);  // z determined by (x, y)

    CHECK(count_naive(from_lists(g22, {1}, {2}, {3})) == 1);
    CHECK(count_naive(from_lists(g22, {1}, {2}, {0})) == 0);

    GroupParams g31(3, 1);
    CHECK(count_naive(from_lists(g31, {1}, {1}, {1})) == 1);  // 1+1+1 = 0 mod 3

    GroupParams g33(3, 3);
    TripleSystem full3(g33, PointSet::full(g33), PointSet::full(g33), PointSet::full(g33));
    CHECK(count_naive(full3) == 729);
}

TEST_CASE("transform equals naive on seeded systems") {
    std::uint64_t trial = 0;
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned n = 1; n <= 4; ++n) {
            GroupParams g(p, n);
            for (int rep = 0; rep < 8; ++rep) {
                TripleSystem sys = random_system_budgeted(g, 4096, derive_seed(7, trial++));
                CHECK(count_transform(sys) == count_naive(sys));
            }
        }
    }
    // every supported prime exercises the generic length-p DFT lines
    for (auto [p, n] : {std::pair<unsigned, unsigned>{7, 2}, {11, 2}, {13, 2}, {17, 1}}) {
        GroupParams g(p, n);
        for (int rep = 0; rep < 5; ++rep) {
            TripleSystem sys = random_system_budgeted(g, 4096, derive_seed(8, trial++));
            CHECK(count_transform(sys) == count_naive(sys));
        }
        TripleSystem full(g, PointSet::full(g), PointSet::full(g), PointSet::full(g));
        CHECK(count_transform(full) == g.order() * g.order());
    }
}

TEST_CASE("transform trivial cases") {
    GroupParams g(3, 3);
    TripleSystem full(g, PointSet::full(g), PointSet::full(g), PointSet::full(g));
    CHECK(count_transform(full) == 729);  // N^2

    TripleSystem empty_x(g, PointSet(g), PointSet::full(g), PointSet::full(g));
    CHECK(count_transform(empty_x) == 0);

    GroupParams g0(2, 0);
    TripleSystem zero(g0, PointSet::full(g0), PointSet::full(g0), PointSet::full(g0));
    CHECK(count_transform(zero) == 1);
    CHECK(count_naive(zero) == 1);
}

TEST_CASE("two-modulus remainder combination under a tight bit budget") {
    // with 8-bit moduli a single prime cannot exceed N*min(|X|,|Y|), which
    // forces the CRT path; counts must still be exact
    GroupParams g(3, 4);  // N = 81
    TransformConfig cfg{8};
    std::uint64_t trial = 1000;
    for (int rep = 0; rep < 20; ++rep) {
        TripleSystem sys = random_system(g, 50, 60, 40, derive_seed(11, trial++));
        CHECK(count_transform(sys, cfg) == count_naive(sys));
    }
    // plan sanity: the 8-bit plan really has two channels
    TransformPlan plan = plan_transform(3, static_cast<u128>(81) * 50, 8);
    CHECK(plan.channels.size() == 2);
}

TEST_CASE("transform capacity error when even two moduli cannot cover") {
    GroupParams g(2, 10);  // N = 1024, bound ~ 2^20 > product of two 8-bit primes
    TripleSystem full(g, PointSet::full(g), PointSet::full(g), PointSet::full(g));
    CHECK_THROWS_AS(count_transform(full, TransformConfig{8}), CapacityError);
}

TEST_CASE("modulus plans carry primitive roots") {
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u}) {
        TransformPlan plan = plan_transform(p, 1, 62);
        REQUIRE(plan.channels.size() >= 1);
        const auto& ch = plan.channels[0];
        CHECK(is_prime_u64(ch.q));
        CHECK(ch.q % p == 1);
        CHECK(mod_pow(ch.omega, p, ch.q) == 1);
        CHECK(ch.omega != 1);
    }
}

TEST_CASE("degree profile: anchors and consistency") {
    GroupParams g22(2, 2);
    TripleSystem full(g22, PointSet::full(g22), PointSet::full(g22), PointSet::full(g22));
    TriangleStats st = degree_profile(full);
    CHECK(st.total == 16);
    for (Point a = 0; a < 4; ++a) {
        CHECK(st.deg_x[a] == 4);
        CHECK(st.deg_y[a] == 4);
        CHECK(st.deg_z[a] == 4);
    }
    CHECK(st.max_degree == 4);
    CHECK(st.rho == Rational::of(1, 1));
    CHECK(st.delta == Rational::of(1, 1));

    TripleSystem single = from_lists(g22, {1}, {2}, {3});
    TriangleStats st1 = degree_profile(single);
    CHECK(st1.total == 1);
    CHECK(st1.deg_x[1] == 1);
    CHECK(st1.deg_y[2] == 1);
    CHECK(st1.deg_z[3] == 1);
    CHECK(st1.max_degree == 1);
}

TEST_CASE("degree profile equals brute recount on seeded systems") {
    std::uint64_t trial = 50;
    for (unsigned p : {2u, 3u}) {
        GroupParams g(p, 3);
        for (int rep = 0; rep < 10; ++rep) {
            TripleSystem sys = random_system_budgeted(g, 256, derive_seed(21, trial++));
            TriangleStats st = degree_profile(sys);
            auto brute = brute_degrees(sys);
            std::uint64_t sum_x = 0, sum_y = 0, sum_z = 0;
            for (Point a = 0; a < g.order(); ++a) {
                sum_x += st.deg_x[a];
                sum_y += st.deg_y[a];
                sum_z += st.deg_z[a];
                auto get = [&](char role) {
                    auto it = brute.find({role, a});
                    return it == brute.end() ? 0ull : it->second;
                };
                CHECK(st.deg_x[a] == get('x'));
                CHECK(st.deg_y[a] == get('y'));
                CHECK(st.deg_z[a] == get('z'));
            }
            std::uint64_t total = count_naive(sys);
            CHECK(sum_x == total);
            CHECK(sum_y == total);
            CHECK(sum_z == total);
            CHECK(st.total == total);
        }
    }
}

TEST_CASE("degree profile transform path agrees with the naive path") {
    // dense instance drives pair_work >= N n p, exercising the convolution path
    GroupParams g(2, 6);
    TripleSystem dense(g, PointSet::full(g), PointSet::full(g), PointSet::full(g));
    TriangleStats st = degree_profile(dense);
    CHECK(st.total == count_naive(dense));
    for (Point a = 0; a < g.order(); ++a) CHECK(st.deg_x[a] == 64);
}

TEST_CASE("restriction") {
    GroupParams g(2, 3);
    std::uint64_t trial = 90;
    TripleSystem sys = random_system(g, 5, 6, 4, derive_seed(31, trial));

    SubspaceBasis whole = sample_subspace(g, 3, 1);
    TripleSystem same = restrict_to_subspace(sys, whole);
    CHECK(count_naive(same) == count_naive(sys));
    CHECK(same.X.members() == sys.X.members());

    SubspaceBasis zero = sample_subspace(g, 0, 1);
    TripleSystem origin = restrict_to_subspace(sys, zero);
    std::uint64_t expect =
        sys.X.contains(0) && sys.Y.contains(0) && sys.Z.contains(0) ? 1 : 0;
    CHECK(count_naive(origin) == expect);

    // monotone under restriction, and restricted triangles are exactly the
    // ambient ones with all three points inside U
    for (int rep = 0; rep < 100; ++rep) {
        TripleSystem s = random_system_budgeted(g, 64, derive_seed(33, rep));
        SubspaceBasis u = sample_subspace(g, 2, derive_seed(34, rep));
        TripleSystem r = restrict_to_subspace(s, u);
        CHECK(count_naive(r) <= count_naive(s));
        PointSet uset = enumerate_subspace(u);
        std::uint64_t expect_count = 0;
        for (const Triangle& t : list_triangles(s))
            if (uset.contains(t.x) && uset.contains(t.y) && uset.contains(t.z))
                ++expect_count;
        CHECK(count_naive(r) == expect_count);
    }
}

TEST_CASE("good triangles") {
    GroupParams g22(2, 2);
    TripleSystem full(g22, PointSet::full(g22), PointSet::full(g22), PointSet::full(g22));
    CHECK(good_triangles(full).empty());  // every degree is 4

    // seeded sparse systems: must match the brute-force degree filter
    GroupParams g(2, 4);
    for (int rep = 0; rep < 20; ++rep) {
        TripleSystem sys = random_system_budgeted(g, 100, derive_seed(41, rep));
        auto brute = brute_degrees(sys);
        std::vector<Triangle> expect;
        for (const Triangle& t : list_triangles(sys)) {
            if (brute[{'x', t.x}] == 1 && brute[{'y', t.y}] == 1 && brute[{'z', t.z}] == 1)
                expect.push_back(t);
        }
        auto got = good_triangles(sys);
        CHECK(got == expect);
    }
}

TEST_CASE("verify_matching") {
    GroupParams g(2, 2);
    // t1 = ((1,0),(0,1),(1,1)), t2 = ((0,1),(1,0),(1,1)): shared z forces a
    // cross equality
    MatchedTriples bad = make_matched(g, {Triangle{1, 2, 3}, Triangle{2, 1, 3}});
    CHECK_FALSE(verify_matching(bad));

    MatchedTriples single = make_matched(g, {Triangle{1, 2, 3}});
    CHECK(verify_matching(single));

    MatchedTriples zero = make_matched(g, {Triangle{0, 0, 0}});
    CHECK(verify_matching(zero));

    CHECK_THROWS_AS(make_matched(g, {Triangle{1, 2, 0}}), ValidationError);

    // a verified matching has exactly |M| triangles on its coordinate sets,
    // all of them good
    for (auto [p, t, m_sz] : {std::tuple<unsigned, unsigned, std::uint64_t>{3, 1, 3},
                              {2, 2, 4},
                              {3, 2, 7}}) {
        GroupParams tags(p, t);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            MatchedTriples m = diagonal_matching_seeded(p, t, m_sz, seed);
            REQUIRE(verify_matching(m));
            TripleSystem sys = system_from(m);
            CHECK(count_naive(sys) == m.triples.size());
            CHECK(good_triangles(sys).size() == m.triples.size());
        }
    }
}

TEST_CASE("list_triangles order, length, and cap") {
    GroupParams g(2, 3);
    for (int rep = 0; rep < 10; ++rep) {
        TripleSystem sys = random_system_budgeted(g, 64, derive_seed(51, rep));
        auto tris = list_triangles(sys);
        CHECK(tris.size() == count_naive(sys));
        CHECK(std::is_sorted(tris.begin(), tris.end(), [](const Triangle& a, const Triangle& b) {
            return a.x != b.x ? a.x < b.x : a.y < b.y;
        }));
    }

    TripleSystem full(g, PointSet::full(g), PointSet::full(g), PointSet::full(g));
    CHECK_THROWS_AS(list_triangles(full, 10), ListCapExceeded);
    try {
        list_triangles(full, 10);
    } catch (const ListCapExceeded& e) {
        CHECK(e.exact_count == 64);
    }

    TripleSystem none(g, PointSet(g), PointSet::full(g), PointSet::full(g));
    CHECK(list_triangles(none).empty());
}
