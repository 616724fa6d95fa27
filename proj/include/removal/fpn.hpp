#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "removal/errors.hpp"

namespace removal {

// A point of F_p^n encoded as its little-endian base-p digit index:
// index = sum_i d_i * p^i.  All file formats use this encoding.
using Point = std::uint64_t;

constexpr unsigned kMaxPrime = 17;

// Dense indicators and degree arrays are only materialized up to this group
// order; larger groups are handled by lazy/formula paths.
constexpr std::uint64_t kDenseCap = 1ull << 22;

/// The ambient group F_p^n.  Immutable; carries the per-digit mod-p tables
/// used by every counting kernel.
class GroupParams {
public:
    GroupParams(unsigned p, unsigned n);

    unsigned p() const { return p_; }
    unsigned n() const { return n_; }
    std::uint64_t order() const { return order_; }  // N = p^n
    std::uint64_t pow_p(unsigned i) const { return pow_[i]; }

    bool operator==(const GroupParams& o) const { return p_ == o.p_ && n_ == o.n_; }

    Point add(Point a, Point b) const {
        if (p_ == 2) return a ^ b;
        Point r = 0;
        std::uint64_t place = 1;
        while (a | b) {
            r += place * add_[(a % p_) * kTab + (b % p_)];
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return r;
    }

    Point neg(Point a) const {
        if (p_ == 2) return a;
        Point r = 0;
        std::uint64_t place = 1;
        while (a) {
            r += place * neg_[a % p_];
            a /= p_;
            place *= p_;
        }
        return r;
    }

    Point sub(Point a, Point b) const { return add(a, neg(b)); }

    // c * a with c in [0, p)
    Point scale(unsigned c, Point a) const {
        if (p_ == 2) return c ? a : 0;
        Point r = 0;
        std::uint64_t place = 1;
        while (a) {
            r += place * mul_[c * kTab + (a % p_)];
            a /= p_;
            place *= p_;
        }
        return r;
    }

    unsigned digit(Point a, unsigned i) const {
        return static_cast<unsigned>((a / pow_[i]) % p_);
    }

    unsigned digit_inverse(unsigned d) const { return inv_[d]; }  // d != 0

    void check_point(Point a) const {
        if (a >= order_) throw ValidationError("point index out of range");
    }

    std::vector<std::uint8_t> to_digits(Point a) const;
    Point from_digits(const std::vector<std::uint8_t>& digits) const;

private:
    static constexpr unsigned kTab = kMaxPrime + 1;
    unsigned p_, n_;
    std::uint64_t order_;
    std::vector<std::uint64_t> pow_;
    std::array<std::uint8_t, kTab * kTab> add_{};
    std::array<std::uint8_t, kTab * kTab> mul_{};
    std::array<std::uint8_t, kTab> neg_{};
    std::array<std::uint8_t, kTab> inv_{};
};

// u + v with range validation.
Point add_points(const GroupParams& g, Point u, Point v);
Point negate_point(const GroupParams& g, Point u);

// true iff u, v are both nonzero and span a 2-dimensional subspace
bool pairwise_independent(const GroupParams& g, Point u, Point v);

/// A set of points of F_p^n, stored as a dense indicator plus cardinality.
class PointSet {
public:
    explicit PointSet(const GroupParams& g);
    static PointSet full(const GroupParams& g);

    const GroupParams& params() const { return params_; }

    bool contains(Point a) const { return ind_[a] != 0; }
    void insert(Point a);
    void erase(Point a);
    std::uint64_t size() const { return card_; }

    std::vector<Point> members() const;  // ascending index order
    const std::vector<std::uint8_t>& indicator() const { return ind_; }

private:
    GroupParams params_;
    std::vector<std::uint8_t> ind_;
    std::uint64_t card_ = 0;
};

/// Basis of a d-dimensional subspace; rows are linearly independent.
struct SubspaceBasis {
    GroupParams params;
    unsigned dim;
    std::vector<Point> basis;
};

// Uniform over all d-dimensional subspaces (rejection on random d x n
// matrices); deterministic given seed.
SubspaceBasis sample_subspace(const GroupParams& g, unsigned d, std::uint64_t seed);

// Uniform over d-dimensional subspaces containing span(fixed); fixed must be
// independent.  Used by the conditional-membership experiment.
SubspaceBasis sample_subspace_containing(const GroupParams& g,
                                         const std::vector<Point>& fixed, unsigned d,
                                         std::uint64_t seed);

// All p^d linear combinations of the basis; throws on dependent rows.
PointSet enumerate_subspace(const SubspaceBasis& basis);

// rank of the set of points viewed as vectors (row reduction mod p)
unsigned rank_of(const GroupParams& g, const std::vector<Point>& rows);

/// Canonical identifier of span{u,v}: the two rows of its reduced row
/// echelon basis, re-encoded as point indices.
struct PlaneId {
    Point row0, row1;
    auto operator<=>(const PlaneId&) const = default;
};

PlaneId canonical_plane_id(const GroupParams& g, Point u, Point v);

}  // namespace removal
