#include "removal/fpn.hpp"

#include <algorithm>
#include <cmath>

#include "removal/rng.hpp"

namespace removal {

namespace {

bool is_prime_trial_division(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

GroupParams::GroupParams(unsigned p, unsigned n) : p_(p), n_(n) {
    if (!is_prime_trial_division(p)) throw ValidationError("p must be prime");
    if (p > kMaxPrime) throw ValidationError("p > 17 is not supported");
    // N and N^2 must stay inside exact 64-/128-bit arithmetic
    long double bits = n * std::log2l(static_cast<long double>(p));
    if (bits > 62.0L) throw ValidationError("p^n exceeds the 62-bit capacity");

    pow_.resize(n_ + 1);
    pow_[0] = 1;
    for (unsigned i = 1; i <= n_; ++i) pow_[i] = pow_[i - 1] * p_;
    order_ = pow_[n_];

    for (unsigned a = 0; a < p_; ++a) {
        neg_[a] = static_cast<std::uint8_t>((p_ - a) % p_);
        for (unsigned b = 0; b < p_; ++b) {
            add_[a * kTab + b] = static_cast<std::uint8_t>((a + b) % p_);
            mul_[a * kTab + b] = static_cast<std::uint8_t>((a * b) % p_);
        }
    }
    inv_[0] = 0;
    for (unsigned a = 1; a < p_; ++a)
        for (unsigned b = 1; b < p_; ++b)
            if (mul_[a * kTab + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
}

std::vector<std::uint8_t> GroupParams::to_digits(Point a) const {
    std::vector<std::uint8_t> d(n_);
    for (unsigned i = 0; i < n_; ++i) {
        d[i] = static_cast<std::uint8_t>(a % p_);
        a /= p_;
    }
    return d;
}

Point GroupParams::from_digits(const std::vector<std::uint8_t>& digits) const {
    Point a = 0;
    for (unsigned i = 0; i < n_; ++i) a += pow_[i] * digits[i];
    return a;
}

Point add_points(const GroupParams& g, Point u, Point v) {
    g.check_point(u);
    g.check_point(v);
    return g.add(u, v);
}

Point negate_point(const GroupParams& g, Point u) {
    g.check_point(u);
    return g.neg(u);
}

bool pairwise_independent(const GroupParams& g, Point u, Point v) {
    if (u == 0 || v == 0) return false;
    for (unsigned c = 1; c < g.p(); ++c)
        if (g.scale(c, u) == v) return false;
    return true;
}

PointSet::PointSet(const GroupParams& g) : params_(g) {
    if (g.order() > kDenseCap)
        throw CapacityError("group order too large for a dense point set");
    ind_.assign(g.order(), 0);
}

PointSet PointSet::full(const GroupParams& g) {
    PointSet s(g);
    std::fill(s.ind_.begin(), s.ind_.end(), 1);
    s.card_ = g.order();
    return s;
}

void PointSet::insert(Point a) {
    params_.check_point(a);
    if (!ind_[a]) {
        ind_[a] = 1;
        ++card_;
    }
}

void PointSet::erase(Point a) {
    params_.check_point(a);
    if (ind_[a]) {
        ind_[a] = 0;
        --card_;
    }
}

std::vector<Point> PointSet::members() const {
    std::vector<Point> out;
    out.reserve(card_);
    for (Point a = 0; a < ind_.size(); ++a)
        if (ind_[a]) out.push_back(a);
    return out;
}

namespace {

// Row-reduce a list of digit rows in place; returns the rank.  Rows are
// length-n digit vectors mod p.
unsigned row_reduce(const GroupParams& g, std::vector<std::vector<std::uint8_t>>& rows,
                    bool reduced) {
    const unsigned p = g.p();
    const unsigned n = g.n();
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < rows.size(); ++col) {
        unsigned pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        unsigned inv = g.digit_inverse(rows[rank][col]);
        for (unsigned j = 0; j < n; ++j)
            rows[rank][j] = static_cast<std::uint8_t>((rows[rank][j] * inv) % p);
        unsigned start = reduced ? 0 : rank + 1;
        for (unsigned r = start; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            unsigned f = rows[r][col];
            for (unsigned j = 0; j < n; ++j) {
                unsigned sub = (rows[r][j] + (p - (f * rows[rank][j]) % p)) % p;
                rows[r][j] = static_cast<std::uint8_t>(sub);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

unsigned rank_of(const GroupParams& g, const std::vector<Point>& rows) {
    std::vector<std::vector<std::uint8_t>> m;
    m.reserve(rows.size());
    for (Point r : rows) m.push_back(g.to_digits(r));
    return row_reduce(g, m, false);
}

SubspaceBasis sample_subspace(const GroupParams& g, unsigned d, std::uint64_t seed) {
    if (d > g.n()) throw ValidationError("subspace dimension exceeds n");
    Rng rng(seed);
    std::vector<Point> rows(d);
    for (;;) {
        for (unsigned i = 0; i < d; ++i) rows[i] = rng.below(g.order());
        if (rank_of(g, rows) == d) break;
    }
    return SubspaceBasis{g, d, rows};
}

SubspaceBasis sample_subspace_containing(const GroupParams& g,
                                         const std::vector<Point>& fixed, unsigned d,
                                         std::uint64_t seed) {
    if (d > g.n()) throw ValidationError("subspace dimension exceeds n");
    if (fixed.size() > d) throw ValidationError("fixed set larger than target dimension");
    if (rank_of(g, fixed) != fixed.size()) throw ValidationError("fixed vectors dependent");
    Rng rng(seed);
    std::vector<Point> rows(fixed);
    rows.resize(d);
    for (;;) {
        for (unsigned i = static_cast<unsigned>(fixed.size()); i < d; ++i)
            rows[i] = rng.below(g.order());
        if (rank_of(g, rows) == d) break;
    }
    return SubspaceBasis{g, d, rows};
}

PointSet enumerate_subspace(const SubspaceBasis& basis) {
    const GroupParams& g = basis.params;
    if (rank_of(g, basis.basis) != basis.dim || basis.basis.size() != basis.dim)
        throw ValidationError("dependent basis");
    PointSet out(g);
    std::vector<Point> pts{0};
    pts.reserve(static_cast<std::size_t>(1) << basis.dim);
    for (Point b : basis.basis) {
        std::size_t old = pts.size();
        for (unsigned c = 1; c < g.p(); ++c) {
            Point cb = g.scale(c, b);
            for (std::size_t i = 0; i < old; ++i) pts.push_back(g.add(pts[i], cb));
        }
    }
    for (Point a : pts) out.insert(a);
    return out;
}

PlaneId canonical_plane_id(const GroupParams& g, Point u, Point v) {
    if (!pairwise_independent(g, u, v)) throw ValidationError("plane id of dependent pair");
    std::vector<std::vector<std::uint8_t>> m{g.to_digits(u), g.to_digits(v)};
    row_reduce(g, m, true);
    return PlaneId{g.from_digits(m[0]), g.from_digits(m[1])};
}

}  // namespace removal
