#include "removal/triangle.hpp"

#include <algorithm>
#include <unordered_map>

#include "removal/transform.hpp"

namespace removal {

TripleSystem::TripleSystem(const GroupParams& g, PointSet x, PointSet y, PointSet z)
    : params(g), X(std::move(x)), Y(std::move(y)), Z(std::move(z)) {
    if (!(X.params() == g && Y.params() == g && Z.params() == g))
        throw ValidationError("triple system sets live in different groups");
}

TripleSystem TripleSystem::empty(const GroupParams& g) {
    return TripleSystem(g, PointSet(g), PointSet(g), PointSet(g));
}

std::uint64_t count_naive(const TripleSystem& sys) {
    const GroupParams& g = sys.params;
    const auto& zind = sys.Z.indicator();
    std::uint64_t total = 0;
    const auto ys = sys.Y.members();
    for (Point x : sys.X.members()) {
        const Point nx = g.neg(x);
        for (Point y : ys) {
            // z = -(x+y) = (-x) + (-y)
            total += zind[g.sub(nx, y)];
        }
    }
    return total;
}

namespace {

std::vector<std::uint64_t> indicator_u64(const PointSet& s) {
    const auto& ind = s.indicator();
    return std::vector<std::uint64_t>(ind.begin(), ind.end());
}

// conv(g') = |{(a,b) in A x B : a + b = g'}| for every g', exactly.
std::vector<u128> exact_convolution(const GroupParams& g, const PointSet& A,
                                    const PointSet& B, u128 value_bound,
                                    unsigned bit_budget) {
    TransformPlan plan = plan_transform(g.p(), value_bound, bit_budget);
    auto a = indicator_u64(A);
    auto b = indicator_u64(B);
    auto c0 = convolve_mod(g, a, b, plan.channels[0]);
    std::vector<u128> out(c0.size());
    if (plan.channels.size() == 1) {
        for (std::size_t i = 0; i < c0.size(); ++i) out[i] = c0[i];
    } else {
        auto c1 = convolve_mod(g, a, b, plan.channels[1]);
        for (std::size_t i = 0; i < c0.size(); ++i)
            out[i] = crt_pair(c0[i], plan.channels[0].q, c1[i], plan.channels[1].q);
    }
    return out;
}

}  // namespace

std::uint64_t count_transform(const TripleSystem& sys, const TransformConfig& cfg) {
    const GroupParams& g = sys.params;
    const std::uint64_t N = g.order();
    // T = sum_g (1_X * 1_Y)(g) 1_Z(-g) <= N * min(|X|,|Y|)
    const u128 bound = static_cast<u128>(N) * std::min(sys.X.size(), sys.Y.size()) + 1;
    TransformPlan plan = plan_transform(g.p(), bound, cfg.bit_budget);

    auto a = indicator_u64(sys.X);
    auto b = indicator_u64(sys.Y);
    const auto zs = sys.Z.members();

    std::vector<std::uint64_t> residues;
    for (const auto& ch : plan.channels) {
        auto conv = convolve_mod(g, a, b, ch);
        u128 acc = 0;
        for (Point z : zs) acc += conv[g.neg(z)];
        residues.push_back(static_cast<std::uint64_t>(acc % ch.q));
    }
    u128 total = plan.channels.size() == 1
                     ? residues[0]
                     : crt_pair(residues[0], plan.channels[0].q, residues[1], plan.channels[1].q);
    return static_cast<std::uint64_t>(total);
}

TriangleStats degree_profile(const TripleSystem& sys) {
    const GroupParams& g = sys.params;
    const std::uint64_t N = g.order();
    TriangleStats st;
    st.deg_x.assign(N, 0);
    st.deg_y.assign(N, 0);
    st.deg_z.assign(N, 0);

    const auto xs = sys.X.members();
    const auto ys = sys.Y.members();
    const std::uint64_t pair_work = sys.X.size() * sys.Y.size();
    const std::uint64_t transform_work =
        static_cast<std::uint64_t>(N) * g.n() * g.p() + N;

    if (pair_work < transform_work) {
        const auto& zind = sys.Z.indicator();
        for (Point x : xs) {
            const Point nx = g.neg(x);
            for (Point y : ys) {
                Point z = g.sub(nx, y);
                if (zind[z]) {
                    ++st.deg_x[x];
                    ++st.deg_y[y];
                    ++st.deg_z[z];
                    ++st.total;
                }
            }
        }
    } else {
        // deg_z(z) = (1_X * 1_Y)(-z), and symmetrically for the other roles;
        // convolution values never exceed min set sizes, well below 2^62
        auto cxy = exact_convolution(g, sys.X, sys.Y, N, 62);
        auto cyz = exact_convolution(g, sys.Y, sys.Z, N, 62);
        auto cxz = exact_convolution(g, sys.X, sys.Z, N, 62);
        for (Point z : sys.Z.members()) {
            st.deg_z[z] = static_cast<std::uint64_t>(cxy[g.neg(z)]);
            st.total += st.deg_z[z];
        }
        for (Point x : xs) st.deg_x[x] = static_cast<std::uint64_t>(cyz[g.neg(x)]);
        for (Point y : ys) st.deg_y[y] = static_cast<std::uint64_t>(cxz[g.neg(y)]);
    }

    st.max_degree = 0;
    for (Point x : xs) st.max_degree = std::max(st.max_degree, st.deg_x[x]);
    for (Point y : ys) st.max_degree = std::max(st.max_degree, st.deg_y[y]);
    for (Point z : sys.Z.members()) st.max_degree = std::max(st.max_degree, st.deg_z[z]);

    st.delta = Rational::of(static_cast<i128>(st.total), static_cast<i128>(N) * N);
    st.rho = Rational::of(static_cast<i128>(st.max_degree), static_cast<i128>(N));
    return st;
}

TripleSystem restrict_to_subspace(const TripleSystem& sys, const SubspaceBasis& basis) {
    if (!(basis.params == sys.params))
        throw ValidationError("subspace basis over a different group");
    PointSet u = enumerate_subspace(basis);
    PointSet rx(sys.params), ry(sys.params), rz(sys.params);
    for (Point a : u.members()) {
        if (sys.X.contains(a)) rx.insert(a);
        if (sys.Y.contains(a)) ry.insert(a);
        if (sys.Z.contains(a)) rz.insert(a);
    }
    return TripleSystem(sys.params, std::move(rx), std::move(ry), std::move(rz));
}

std::vector<Triangle> list_triangles(const TripleSystem& sys, std::uint64_t cap) {
    const std::uint64_t total = count_naive(sys);
    if (total > cap)
        throw ListCapExceeded("triangle list exceeds cap (" + std::to_string(total) +
                                  " triangles)",
                              total);
    const GroupParams& g = sys.params;
    const auto& zind = sys.Z.indicator();
    std::vector<Triangle> out;
    out.reserve(total);
    const auto ys = sys.Y.members();
    for (Point x : sys.X.members()) {
        const Point nx = g.neg(x);
        for (Point y : ys) {
            Point z = g.sub(nx, y);
            if (zind[z]) out.push_back(Triangle{x, y, z});
        }
    }
    return out;
}

std::vector<Triangle> good_triangles(const TripleSystem& sys) {
    TriangleStats st = degree_profile(sys);
    std::vector<Triangle> out;
    const GroupParams& g = sys.params;
    const auto& zind = sys.Z.indicator();
    const auto ys = sys.Y.members();
    for (Point x : sys.X.members()) {
        if (st.deg_x[x] != 1) continue;
        const Point nx = g.neg(x);
        for (Point y : ys) {
            if (st.deg_y[y] != 1) continue;
            Point z = g.sub(nx, y);
            if (zind[z] && st.deg_z[z] == 1) out.push_back(Triangle{x, y, z});
        }
    }
    return out;
}

MatchedTriples make_matched(const GroupParams& g, std::vector<Triangle> triples) {
    for (const Triangle& t : triples) {
        g.check_point(t.x);
        g.check_point(t.y);
        g.check_point(t.z);
        if (g.add(g.add(t.x, t.y), t.z) != 0)
            throw ValidationError("triple does not sum to zero");
    }
    return MatchedTriples{g, std::move(triples), false};
}

bool verify_matching(const MatchedTriples& m) {
    const GroupParams& g = m.params;
    const std::size_t count = m.triples.size();
    std::unordered_map<Point, std::size_t> z_index;
    z_index.reserve(count * 2);
    for (std::size_t k = 0; k < count; ++k) {
        const Triangle& t = m.triples[k];
        if (g.add(g.add(t.x, t.y), t.z) != 0)
            throw ValidationError("triple does not sum to zero");
        // duplicate z's force a cross equality
        if (!z_index.emplace(t.z, k).second) return false;
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            Point need = g.neg(g.add(m.triples[i].x, m.triples[j].y));
            auto it = z_index.find(need);
            if (it == z_index.end()) continue;
            std::size_t k = it->second;
            if (i != j || j != k) return false;
        }
    }
    return true;
}

TripleSystem system_from(const MatchedTriples& m) {
    PointSet x(m.params), y(m.params), z(m.params);
    for (const Triangle& t : m.triples) {
        x.insert(t.x);
        y.insert(t.y);
        z.insert(t.z);
    }
    return TripleSystem(m.params, std::move(x), std::move(y), std::move(z));
}

}  // namespace removal
