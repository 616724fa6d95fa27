#include "removal/rational.hpp"

#include "removal/errors.hpp"

namespace removal {

Rational Rational::of(i128 n, i128 d) {
    if (d == 0) throw ValidationError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational{n, d};
}

Rational Rational::mul(const Rational& o) const {
    // cross-reduce first so intermediates stay inside 128 bits
    i128 g1 = gcd128(num, o.den);
    i128 g2 = gcd128(o.num, den);
    return Rational::of((num / g1) * (o.num / g2), (den / g2) * (o.den / g1));
}

Rational Rational::pow(unsigned k) const {
    Rational r = Rational::integer(1);
    for (unsigned i = 0; i < k; ++i) r = r.mul(*this);
    return r;
}

double Rational::to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rational::str() const {
    return to_string(num) + "/" + to_string(den);
}

}  // namespace removal
