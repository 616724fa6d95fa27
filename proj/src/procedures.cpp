#include "removal/procedures.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "removal/constructions.hpp"
#include "removal/rng.hpp"

namespace removal {

char role_letter(Role r) {
    switch (r) {
        case Role::X: return 'X';
        case Role::Y: return 'Y';
        case Role::Z: return 'Z';
    }
    return '?';
}

MatchedTriples greedy_disjoint(const TripleSystem& sys) {
    const GroupParams& g = sys.params;
    const auto& zind = sys.Z.indicator();
    std::vector<std::uint8_t> used_x(g.order(), 0), used_y(g.order(), 0), used_z(g.order(), 0);
    std::vector<Triangle> taken;
    const auto ys = sys.Y.members();
    for (Point x : sys.X.members()) {
        if (used_x[x]) continue;
        const Point nx = g.neg(x);
        for (Point y : ys) {
            if (used_x[x]) break;
            if (used_y[y]) continue;
            Point z = g.sub(nx, y);
            if (!zind[z] || used_z[z]) continue;
            used_x[x] = used_y[y] = used_z[z] = 1;
            taken.push_back(Triangle{x, y, z});
        }
    }
    return MatchedTriples{g, std::move(taken), false};
}

namespace {

struct DegreeState {
    TripleSystem sys;
    TriangleStats stats;

    explicit DegreeState(const TripleSystem& s) : sys(s), stats(degree_profile(s)) {}

    // Remove one point from one role; updates partner degrees and the count
    // incrementally in O(degree * |partner set|) membership steps.
    void remove(Role role, Point a) {
        const GroupParams& g = sys.params;
        auto drop_triangles_through = [&](PointSet& rolesetA, const PointSet& rolesetB,
                                          const PointSet& rolesetC,
                                          std::vector<std::uint64_t>& degB,
                                          std::vector<std::uint64_t>& degC,
                                          auto partner_of) {
            // enumerate triangles through `a` by scanning the smaller of the
            // two partner sets
            for (Point b : rolesetB.members()) {
                auto [bb, cc] = partner_of(b);
                if (rolesetC.contains(cc)) {
                    --degB[bb];
                    --degC[cc];
                    --stats.total;
                }
            }
            rolesetA.erase(a);
        };
        const Point na = g.neg(a);
        if (role == Role::X) {
            stats.deg_x[a] = 0;
            drop_triangles_through(sys.X, sys.Y, sys.Z, stats.deg_y, stats.deg_z,
                                   [&](Point y) { return std::pair<Point, Point>{y, g.sub(na, y)}; });
        } else if (role == Role::Y) {
            stats.deg_y[a] = 0;
            drop_triangles_through(sys.Y, sys.X, sys.Z, stats.deg_x, stats.deg_z,
                                   [&](Point x) { return std::pair<Point, Point>{x, g.sub(na, x)}; });
        } else {
            stats.deg_z[a] = 0;
            drop_triangles_through(sys.Z, sys.X, sys.Y, stats.deg_x, stats.deg_y,
                                   [&](Point x) { return std::pair<Point, Point>{x, g.sub(na, x)}; });
        }
    }
};

}  // namespace

PruneTrace prune_high_degree(const TripleSystem& sys, const Rational& eps,
                             const PruneSchedule& schedule) {
    if (!(eps.num > 0)) throw ValidationError("prune needs eps > 0");
    const GroupParams& g = sys.params;
    const double N = static_cast<double>(g.order());
    const double eps_v = eps.to_double();

    DegreeState state(sys);
    PruneTrace trace{{}, sys, 0};
    std::uint64_t steps_since_recount = 0;

    for (;;) {
        const std::uint64_t total = state.stats.total;
        if (total == 0) break;
        const double delta_prime = static_cast<double>(total) / (N * N);
        const double threshold = schedule.g(delta_prime) * (delta_prime / eps_v) * N;

        // highest degree; ties resolved by role order then index order
        Role best_role = Role::X;
        Point best_point = 0;
        std::uint64_t best_deg = 0;
        auto scan = [&](Role role, const PointSet& s, const std::vector<std::uint64_t>& deg) {
            for (Point a : s.members()) {
                if (deg[a] > best_deg) {
                    best_deg = deg[a];
                    best_role = role;
                    best_point = a;
                }
            }
        };
        scan(Role::X, state.sys.X, state.stats.deg_x);
        scan(Role::Y, state.sys.Y, state.stats.deg_y);
        scan(Role::Z, state.sys.Z, state.stats.deg_z);

        if (static_cast<double>(best_deg) < threshold) break;

        state.remove(best_role, best_point);
        if (++steps_since_recount == 64) {
            // checksum against a full recount
            steps_since_recount = 0;
            if (count_naive(state.sys) != state.stats.total)
                throw ValidationError("incremental prune count diverged from recount");
        }
        trace.steps.push_back(PruneStep{
            best_role, best_point, best_deg,
            Rational::of(static_cast<i128>(state.stats.total),
                         static_cast<i128>(g.order()) * static_cast<i128>(g.order()))});
    }

    trace.final_system = state.sys;
    trace.final_count = state.stats.total;
    return trace;
}

namespace {

struct TrialSums {
    std::uint64_t restricted = 0;
    std::uint64_t good = 0;
    std::uint64_t max_good = 0;
};

TrialSums run_trials(const TripleSystem& sys, unsigned d, std::uint64_t begin,
                     std::uint64_t end, std::uint64_t master_seed) {
    TrialSums s;
    for (std::uint64_t t = begin; t < end; ++t) {
        SubspaceBasis u = sample_subspace(sys.params, d, derive_seed(master_seed, t));
        TripleSystem r = restrict_to_subspace(sys, u);
        std::uint64_t rt = count_naive(r);
        std::uint64_t gt = good_triangles(r).size();
        s.restricted += rt;
        s.good += gt;
        s.max_good = std::max(s.max_good, gt);
    }
    return s;
}

}  // namespace

void check_restriction_hypotheses(const TripleSystem& sys) {
    const GroupParams& g = sys.params;
    std::vector<Point> all;
    for (Point a : sys.X.members()) all.push_back(a);
    for (Point a : sys.Y.members()) all.push_back(a);
    for (Point a : sys.Z.members()) all.push_back(a);
    for (Point a : sys.X.members())
        if (sys.Y.contains(a) || sys.Z.contains(a))
            throw ValidationError("hypothesis violated: sets not disjoint");
    for (Point a : sys.Y.members())
        if (sys.Z.contains(a)) throw ValidationError("hypothesis violated: sets not disjoint");
    for (Point a : all)
        if (a == 0) throw ValidationError("hypothesis violated: zero vector present");
    for (Point u : all)
        for (Point v : all)
            if (u != v && !pairwise_independent(g, u, v))
                throw ValidationError("hypothesis violated: dependent pair in the union");
    std::set<PlaneId> planes;
    for (const Triangle& t : list_triangles(sys))
        if (!planes.insert(canonical_plane_id(g, t.x, t.y)).second)
            throw ValidationError("hypothesis violated: two triangles share a plane");
}

SubspaceExperimentReport subspace_experiment(const TripleSystem& sys, unsigned d,
                                             std::uint64_t trials, std::uint64_t seed,
                                             unsigned threads, bool check_hypotheses) {
    if (d < 2) throw ValidationError("subspace experiment needs d >= 2");
    if (d > sys.params.n()) throw ValidationError("subspace dimension exceeds n");
    if (check_hypotheses) check_restriction_hypotheses(sys);

    SubspaceExperimentReport rep;
    rep.d = d;
    rep.trials = trials;

    TrialSums sums;
    if (threads <= 1 || trials < 2 * threads) {
        sums = run_trials(sys, d, 0, trials, seed);
    } else {
        std::vector<TrialSums> parts(threads);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = trials / threads;
        for (unsigned i = 0; i < threads; ++i) {
            std::uint64_t b = i * chunk;
            std::uint64_t e = (i + 1 == threads) ? trials : b + chunk;
            pool.emplace_back([&, i, b, e] { parts[i] = run_trials(sys, d, b, e, seed); });
        }
        for (auto& th : pool) th.join();
        for (const auto& part : parts) {
            sums.restricted += part.restricted;
            sums.good += part.good;
            sums.max_good = std::max(sums.max_good, part.max_good);
        }
    }

    rep.total_restricted = sums.restricted;
    rep.total_good = sums.good;
    rep.max_good_single_trial = sums.max_good;
    rep.mean_restricted = trials ? static_cast<double>(sums.restricted) / trials : 0.0;
    rep.mean_good = trials ? static_cast<double>(sums.good) / trials : 0.0;
    rep.good_fraction_given_survival =
        sums.restricted ? static_cast<double>(sums.good) / sums.restricted : 0.0;

    TriangleStats st = degree_profile(sys);
    const double p = sys.params.p();
    const double rho = st.rho.to_double();
    const double delta = st.delta.to_double();
    rep.good_mean_floor = rho > 0 ? delta / (125.0 * p * p * rho * rho) : 0.0;
    const double c_p = solve_exponent(sys.params.p()).c_p;
    rep.capacity = std::exp2((1.0 - c_p) * d * std::log2(p));
    return rep;
}

double membership_frequency(const GroupParams& g, Point v, unsigned d,
                            std::uint64_t trials, std::uint64_t seed) {
    g.check_point(v);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SubspaceBasis u = sample_subspace(g, d, derive_seed(seed, t));
        PointSet s = enumerate_subspace(u);
        if (s.contains(v)) ++hits;
    }
    return trials ? static_cast<double>(hits) / trials : 0.0;
}

double conditional_membership_frequency(const GroupParams& g, Point u0, Point u1,
                                        Point w, unsigned d, std::uint64_t trials,
                                        std::uint64_t seed) {
    if (!pairwise_independent(g, u0, u1))
        throw ValidationError("conditional membership needs independent u0, u1");
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SubspaceBasis u =
            sample_subspace_containing(g, {u0, u1}, d, derive_seed(seed, t));
        PointSet s = enumerate_subspace(u);
        if (s.contains(w)) ++hits;
    }
    return trials ? static_cast<double>(hits) / trials : 0.0;
}

RestrictionDimension restriction_dimension(unsigned p, const Rational& rho) {
    if (!(rho.num > 0)) throw ValidationError("restriction dimension needs rho > 0");
    const double v = std::log2(1.0 / (5.0 * rho.to_double())) / std::log2(static_cast<double>(p));
    const unsigned d = v <= 0 ? 0 : static_cast<unsigned>(std::floor(v));
    return RestrictionDimension{d, d < 3};
}

std::vector<std::pair<unsigned, std::uint64_t>> amplification_audit(
    const TripleSystem& sys, unsigned k_max) {
    std::vector<std::pair<unsigned, std::uint64_t>> out;
    const std::uint64_t base = count_naive(sys);
    std::uint64_t expected = 1;
    for (unsigned k = 1; k <= k_max; ++k) {
        expected *= base;
        TripleSystem power = tensor_power_system(sys, k);
        std::uint64_t got = count_naive(power);
        if (got != expected)
            throw ValidationError("tensor power count diverged from count^k");
        out.emplace_back(k, got);
    }
    return out;
}

}  // namespace removal
