#include "removal/generate.hpp"

#include <algorithm>
#include <cmath>

#include "removal/rng.hpp"

namespace removal {

namespace {

PointSet sample_set(const GroupParams& g, std::uint64_t size, Rng& rng) {
    if (size > g.order()) throw ValidationError("set size exceeds group order");
    PointSet s(g);
    // Floyd's sampling: uniform without replacement
    for (std::uint64_t j = g.order() - size; j < g.order(); ++j) {
        Point t = rng.below(j + 1);
        if (s.contains(t))
            s.insert(j);
        else
            s.insert(t);
    }
    return s;
}

}  // namespace

TripleSystem random_system(const GroupParams& g, std::uint64_t size_x,
                           std::uint64_t size_y, std::uint64_t size_z,
                           std::uint64_t seed) {
    Rng rng(seed);
    PointSet x = sample_set(g, size_x, rng);
    PointSet y = sample_set(g, size_y, rng);
    PointSet z = sample_set(g, size_z, rng);
    return TripleSystem(g, std::move(x), std::move(y), std::move(z));
}

TripleSystem random_system_budgeted(const GroupParams& g, std::uint64_t pair_budget,
                                    std::uint64_t seed) {
    Rng rng(seed);
    const std::uint64_t N = g.order();
    std::uint64_t side = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(pair_budget)));
    while (side > 1 && side * side > pair_budget) --side;
    side = std::min(side, N);
    // sizes in [1, min(N, side-cap)], independently per role
    auto pick = [&](std::uint64_t hi) { return 1 + rng.below(hi); };
    std::uint64_t sx = pick(std::max<std::uint64_t>(1, side));
    std::uint64_t sy = pick(std::max<std::uint64_t>(1, side));
    std::uint64_t sz = pick(N);
    return random_system(g, sx, sy, sz, derive_seed(seed, 1));
}

MatchedTriples random_singleton(const GroupParams& g, std::uint64_t seed) {
    Rng rng(seed);
    Point x = rng.below(g.order());
    Point y = rng.below(g.order());
    Point z = g.neg(g.add(x, y));
    MatchedTriples m{g, {Triangle{x, y, z}}, false};
    m.cross_free_verified = true;  // a single zero-sum triple is always a matching
    return m;
}

}  // namespace removal
