#include "removal/constructions.hpp"

#include <cmath>

#include "removal/rng.hpp"

namespace removal {

MatchedTriples lift_plus_two(const MatchedTriples& m) {
    const GroupParams& g = m.params;
    const unsigned p = g.p();
    GroupParams lifted(p, g.n() + 2);
    const std::uint64_t hi0 = lifted.pow_p(g.n());      // digit n
    const std::uint64_t hi1 = lifted.pow_p(g.n() + 1);  // digit n+1

    std::vector<Triangle> out;
    out.reserve(m.triples.size());
    for (const Triangle& t : m.triples) {
        if (g.add(g.add(t.x, t.y), t.z) != 0)
            throw ValidationError("lift input triple does not sum to zero");
        Point x = t.x + 1 * hi0;                    // (x, 1, 0)
        Point y = t.y + (p - 1) * hi0 + 1 * hi1;    // (y, -1, 1)
        Point z = t.z + (p - 1) * hi1;              // (z, 0, -1)
        out.push_back(Triangle{x, y, z});
    }
    MatchedTriples lifted_m{lifted, std::move(out), false};
    lifted_m.cross_free_verified = m.cross_free_verified;
    return lifted_m;
}

namespace {

void check_power_capacity(unsigned p, unsigned n, unsigned k) {
    long double bits = static_cast<long double>(n) * k * std::log2l(static_cast<long double>(p));
    if (bits > 62.0L) throw CapacityError("tensor power exceeds the 62-bit group capacity");
}

}  // namespace

TripleSystem tensor_power_system(const TripleSystem& sys, unsigned k) {
    if (k == 0) throw ValidationError("tensor power needs k >= 1");
    const GroupParams& g = sys.params;
    check_power_capacity(g.p(), g.n(), k);
    GroupParams big(g.p(), g.n() * k);
    if (big.order() > kDenseCap)
        throw CapacityError("tensor power exceeds the dense set capacity");

    const std::uint64_t N = g.order();
    auto power_set = [&](const PointSet& s) {
        PointSet out(big);
        const auto mem = s.members();
        // odometer over k blocks
        std::vector<std::size_t> idx(k, 0);
        if (mem.empty()) return out;
        for (;;) {
            Point v = 0;
            std::uint64_t place = 1;
            for (unsigned b = 0; b < k; ++b) {
                v += mem[idx[b]] * place;
                place *= N;
            }
            out.insert(v);
            unsigned b = 0;
            while (b < k) {
                if (++idx[b] < mem.size()) break;
                idx[b] = 0;
                ++b;
            }
            if (b == k) break;
        }
        return out;
    };
    return TripleSystem(big, power_set(sys.X), power_set(sys.Y), power_set(sys.Z));
}

MatchedTriples tensor_power_matched(const MatchedTriples& m, unsigned k) {
    if (k == 0) throw ValidationError("tensor power needs k >= 1");
    if (!m.cross_free_verified || !verify_matching(m))
        throw ValidationError("tensor power of an unverified collection");
    const GroupParams& g = m.params;
    check_power_capacity(g.p(), g.n(), k);
    GroupParams big(g.p(), g.n() * k);

    u128 out_size;
    if (!pow_overflow(static_cast<u128>(m.triples.size()), k, out_size) ||
        out_size > kDefaultListCap)
        throw CapacityError("tensor power collection too large");

    const std::uint64_t N = g.order();
    std::vector<Triangle> out;
    out.reserve(static_cast<std::size_t>(out_size));
    std::vector<std::size_t> idx(k, 0);
    if (!m.triples.empty()) {
        for (;;) {
            Point x = 0, y = 0, z = 0;
            std::uint64_t place = 1;
            for (unsigned b = 0; b < k; ++b) {
                const Triangle& t = m.triples[idx[b]];
                x += t.x * place;
                y += t.y * place;
                z += t.z * place;
                place *= N;
            }
            out.push_back(Triangle{x, y, z});
            unsigned b = 0;
            while (b < k) {
                if (++idx[b] < m.triples.size()) break;
                idx[b] = 0;
                ++b;
            }
            if (b == k) break;
        }
    }
    MatchedTriples res{big, std::move(out), false};
    res.cross_free_verified = true;  // preserved blockwise; re-checked in tests
    return res;
}

BlowupResult product_blowup(const MatchedTriples& m, unsigned l) {
    if (!m.cross_free_verified || !verify_matching(m))
        throw ValidationError("blow-up of an unverified collection");
    const GroupParams& g = m.params;
    const unsigned p = g.p();
    long double bits = (g.n() + l) * std::log2l(static_cast<long double>(p));
    if (bits > 62.0L) throw CapacityError("blow-up exceeds the 62-bit group capacity");
    GroupParams big(p, g.n() + l);

    u128 pl, p2l;
    if (!pow_overflow(p, l, pl) || !mul_overflow(pl, pl, p2l))
        throw CapacityError("blow-up formula overflows");
    const u128 msz = m.triples.size();
    u128 tri_count, del_count;
    if (!mul_overflow(msz, p2l, tri_count) || !mul_overflow(msz, pl, del_count))
        throw CapacityError("blow-up formula overflows");

    BlowupResult res{big, tri_count, del_count, std::nullopt};
    if (big.order() <= kBlowupDenseCap) {
        PointSet x(big), y(big), z(big);
        const std::uint64_t base = g.order();
        const std::uint64_t fibre = static_cast<std::uint64_t>(pl);
        for (const Triangle& t : m.triples) {
            for (std::uint64_t f = 0; f < fibre; ++f) {
                x.insert(t.x + f * base);
                y.insert(t.y + f * base);
                z.insert(t.z + f * base);
            }
        }
        res.dense = TripleSystem(big, std::move(x), std::move(y), std::move(z));
    }
    return res;
}

namespace {

MatchedTriples diagonal_from_tags(unsigned p, unsigned t, const std::vector<Point>& tags) {
    GroupParams g(p, 2 * t);
    GroupParams tag_group(p, t);
    const std::uint64_t shift = g.pow_p(t);  // p^t
    std::vector<Triangle> out;
    out.reserve(tags.size());
    for (Point u : tags) {
        Point nu = tag_group.neg(u);
        Point x = u;                   // (u, 0)
        Point y = u * shift;           // (0, u)
        Point z = nu + nu * shift;     // (-u, -u)
        out.push_back(Triangle{x, y, z});
    }
    MatchedTriples m{g, std::move(out), false};
    m.cross_free_verified = true;  // distinct tags force i=j=k blockwise
    return m;
}

}  // namespace

MatchedTriples diagonal_matching(unsigned p, unsigned t, std::uint64_t m) {
    GroupParams tag_group(p, t);
    if (m > tag_group.order()) throw ValidationError("diagonal matching needs m <= p^t");
    std::vector<Point> tags(m);
    for (std::uint64_t i = 0; i < m; ++i) tags[i] = i;
    return diagonal_from_tags(p, t, tags);
}

MatchedTriples diagonal_matching_seeded(unsigned p, unsigned t, std::uint64_t m,
                                        std::uint64_t seed) {
    GroupParams tag_group(p, t);
    const std::uint64_t order = tag_group.order();
    if (m > order) throw ValidationError("diagonal matching needs m <= p^t");
    // partial Fisher-Yates over the tag universe
    std::vector<Point> universe(order);
    for (std::uint64_t i = 0; i < order; ++i) universe[i] = i;
    Rng rng(seed);
    std::vector<Point> tags;
    tags.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uint64_t j = i + rng.below(order - i);
        std::swap(universe[i], universe[j]);
        tags.push_back(universe[i]);
    }
    return diagonal_from_tags(p, t, tags);
}

std::vector<FamilyPoint> family_curve(const std::vector<MatchedTriples>& bases,
                                      unsigned k_max) {
    std::vector<FamilyPoint> out;
    for (const MatchedTriples& base : bases) {
        if (!base.cross_free_verified || !verify_matching(base))
            throw ValidationError("family curve needs verified bases");
        const GroupParams& g = base.params;
        const unsigned p = g.p();
        const unsigned n = g.n();
        const std::uint64_t m = base.triples.size();
        if (n == 0 || m == 0) throw ValidationError("family curve base must be nonempty with n >= 1");

        const double logp_m = std::log2(static_cast<double>(m)) / std::log2(static_cast<double>(p));
        const double exponent = 1.0 + 1.0 / (1.0 - logp_m / n);

        Rational eps1 = Rational::of(static_cast<i128>(m), static_cast<i128>(g.order()));
        Rational del1 = Rational::of(static_cast<i128>(m),
                                     static_cast<i128>(g.order()) * static_cast<i128>(g.order()));
        for (unsigned k = 1; k <= k_max; ++k) {
            // capacity: p^{2nk} must fit the 128-bit rational components
            long double bits = 2.0L * n * k * std::log2l(static_cast<long double>(p));
            if (bits > 126.0L) break;
            u128 mk;
            if (!pow_overflow(m, k, mk)) break;
            FamilyPoint fp;
            fp.base_n = n;
            fp.base_m = m;
            fp.k = k;
            fp.n = n * k;
            fp.m = mk;
            fp.epsilon = eps1.pow(k);
            fp.delta = del1.pow(k);
            fp.exponent = exponent;
            out.push_back(fp);
        }
    }
    return out;
}

}  // namespace removal
