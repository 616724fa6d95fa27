#include "removal/exponents.hpp"

#include <cmath>
#include <cstdint>

namespace removal {

namespace {

// All logarithms here are base 2; every conversion in this
// module goes through these two helpers.
double log2_of(double v) { return std::log2(v); }
double exp2_of(double v) { return std::exp2(v); }

void check_prime_supported(unsigned p) {
    switch (p) {
        case 2: case 3: case 5: case 7: case 11: case 13: case 17: return;
        default: throw ValidationError("unsupported prime (need p in {2,3,5,7,11,13,17})");
    }
}

// d/dx log h(x) = -(p-1)/(3x) + (sum j x^{j-1}) / (sum x^j)
double log_h_derivative(unsigned p, double x) {
    double s = 0.0, ds = 0.0, xj = 1.0;
    for (unsigned j = 0; j < p; ++j) {
        s += xj;
        if (j + 1 < p) ds += static_cast<double>(j + 1) * xj;
        xj *= x;
    }
    // ds currently holds sum_{j=1}^{p-1} j x^{j-1}
    return -static_cast<double>(p - 1) / (3.0 * x) + ds / s;
}

}  // namespace

double objective_h(unsigned p, double x) {
    check_prime_supported(p);
    if (!(x > 0.0 && x < 1.0)) throw ValidationError("objective_h needs 0 < x < 1");
    double s = 0.0, xj = 1.0;
    for (unsigned j = 0; j < p; ++j) {
        s += xj;
        xj *= x;
    }
    return std::pow(x, -static_cast<double>(p - 1) / 3.0) * s;
}

ExponentTable solve_exponent(unsigned p, double tol) {
    check_prime_supported(p);
    if (!(tol > 0.0)) throw ValidationError("tol must be positive");

    // Sign scan of d/dx log h over a grid of (0,1): exactly one - to +
    // transition is expected (h is unimodal for supported p).
    const int grid = 4096;
    double lo = 0.0, hi = 0.0;
    int transitions = 0;
    double prev_x = 1.0 / (grid + 1);
    double prev_sign = log_h_derivative(p, prev_x) < 0 ? -1.0 : 1.0;
    for (int i = 2; i <= grid; ++i) {
        double x = static_cast<double>(i) / (grid + 1);
        double sign = log_h_derivative(p, x) < 0 ? -1.0 : 1.0;
        if (sign != prev_sign) {
            ++transitions;
            lo = prev_x;
            hi = x;
            if (prev_sign > 0) throw ValidationError("objective not unimodal (+ to - transition)");
        }
        prev_x = x;
        prev_sign = sign;
    }
    if (transitions != 1) throw ValidationError("objective not unimodal on (0,1)");

    // Golden-section on the bracket.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = objective_h(p, c), fd = objective_h(p, d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = objective_h(p, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = objective_h(p, d);
        }
    }
    double x_star = (a + b) / 2.0;
    double h_star = objective_h(p, x_star);
    double c_p = 1.0 - log2_of(h_star) / log2_of(static_cast<double>(p));

    ExponentTable t{p, c_p, 1.0 + 1.0 / c_p, x_star, h_star, std::nullopt, std::nullopt};
    if (p == 3) {
        double av = (std::sqrt(33.0) - 1.0) / 8.0;
        t.a = av;
        t.b = std::pow(av, -2.0 / 3.0) + std::pow(av, 1.0 / 3.0) + std::pow(av, 4.0 / 3.0);
    }
    return t;
}

ExponentTable closed_form(unsigned p) {
    if (p == 2) {
        // stationary point of x^{-1/3}(1+x) is x = 1/2
        double x_star = 0.5;
        double h_star = 3.0 * std::pow(2.0, -2.0 / 3.0);
        double c2 = 5.0 / 3.0 - log2_of(3.0);
        return ExponentTable{2, c2, 1.0 + 1.0 / c2, x_star, h_star, std::nullopt, std::nullopt};
    }
    if (p == 3) {
        // positive root of 4x^2 + x - 2 = 0
        double av = (std::sqrt(33.0) - 1.0) / 8.0;
        double bv = std::pow(av, -2.0 / 3.0) + std::pow(av, 1.0 / 3.0) + std::pow(av, 4.0 / 3.0);
        double c3 = 1.0 - log2_of(bv) / log2_of(3.0);
        ExponentTable t{3, c3, 1.0 + 1.0 / c3, av, bv, av, bv};
        return t;
    }
    throw ValidationError("closed_form supports only p in {2,3}");
}

double delta_lower_bound(unsigned p, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("delta_lower_bound needs 0 < eps < 1");
    return std::pow(eps / 3.0, solve_exponent(p).C_p);
}

double sumfree_size_bound(unsigned p, unsigned n) {
    double c_p = solve_exponent(p).c_p;
    return exp2_of((1.0 - c_p) * n * log2_of(static_cast<double>(p)));
}

std::uint64_t sumfree_size_cap(unsigned p, unsigned n) {
    return static_cast<std::uint64_t>(std::floor(sumfree_size_bound(p, n)));
}

PruneSchedule build_prune_schedule(unsigned p) {
    check_prime_supported(p);
    const double c_p = solve_exponent(p).c_p;

    // first power of two at or below 5/p^4
    double limit = 5.0 / std::pow(static_cast<double>(p), 4.0);
    int k0 = 1;
    while (std::exp2(-k0) > limit) ++k0;

    const int grid_points = 10000;
    const int partial_terms = 10000;
    for (int k = k0; k <= 64; ++k) {
        double a_p = std::exp2(-k);
        PruneSchedule s{p, c_p, k, a_p};

        // grid over (0, a_p]: g increasing as beta decreases, g*beta and
        // beta^c g^{1+c} decreasing as beta decreases
        bool ok = true;
        double prev_g = 0, prev_gb = 0, prev_m3 = 0;
        for (int j = 1; j <= grid_points && ok; ++j) {
            double beta = a_p * static_cast<double>(j) / grid_points;
            double gv = s.g(beta);
            double gb = gv * beta;
            double m3 = std::pow(beta, c_p) * std::pow(gv, 1.0 + c_p);
            if (j > 1) {
                if (!(prev_g > gv)) ok = false;    // g must grow as beta shrinks
                if (!(prev_gb < gb)) ok = false;   // g*beta must shrink as beta shrinks
                if (!(prev_m3 < m3)) ok = false;   // beta^c g^{1+c} must shrink as beta shrinks
            }
            prev_g = gv;
            prev_gb = gb;
            prev_m3 = m3;
        }
        if (!ok) continue;

        // sum_{i>=1} 1/g(2^{-i} a_p) = sum 1/(k+i)^2; partial sum plus the
        // analytic tail bound 1/(k+I) must stay at or below 1/4
        double sum = 0.0;
        for (int i = 1; i <= partial_terms; ++i) {
            double t = static_cast<double>(k) + i;
            sum += 1.0 / (t * t);
        }
        sum += 1.0 / (static_cast<double>(k) + partial_terms);
        if (sum > 0.25) continue;

        return s;
    }
    throw ValidationError("no admissible a_p found down to 2^-64");
}

}  // namespace removal
