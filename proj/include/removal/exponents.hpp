#pragma once

#include <cmath>
#include <optional>

#include "removal/errors.hpp"

namespace removal {

/// The sum-free rate exponent of F_p: p^{1-c_p} = inf_{0<x<1} h(x) with
/// h(x) = x^{-(p-1)/3} (1 + x + ... + x^{p-1}), and C_p = 1 + 1/c_p.
struct ExponentTable {
    unsigned p;
    double c_p;
    double C_p;
    double x_star;  // minimizer of h on (0,1)
    double h_star;  // h(x_star) = p^{1-c_p}
    std::optional<double> a;  // p=3 only: (sqrt(33)-1)/8
    std::optional<double> b;  // p=3 only: a^{-2/3}+a^{1/3}+a^{4/3}
};

double objective_h(unsigned p, double x);

// Derivative sign scan (unimodality check) followed by golden-section
// refinement of the bracket down to width tol.
ExponentTable solve_exponent(unsigned p, double tol = 1e-12);

// Closed forms, p in {2,3}: the authoritative test anchors.
ExponentTable closed_form(unsigned p);

// Removal bound: delta = (eps/3)^{C_p}, 0 < eps < 1.
double delta_lower_bound(unsigned p, double eps);

// Largest admissible matched-collection size: p^{(1-c_p) n} and its floor.
double sumfree_size_bound(unsigned p, unsigned n);
std::uint64_t sumfree_size_cap(unsigned p, unsigned n);

/// Degree-pruning schedule: g(beta) = log2^2(1/beta) together with an
/// admissible threshold a_p (a power of two, certified on a grid).
struct PruneSchedule {
    unsigned p;
    double c_p;
    int a_p_log2;  // a_p = 2^{-a_p_log2}
    double a_p;

    double g(double beta) const {
        double l = -std::log2(beta);
        return l * l;
    }
};

PruneSchedule build_prune_schedule(unsigned p);

}  // namespace removal
