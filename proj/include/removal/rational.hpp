#pragma once

#include <string>

#include "removal/int128.hpp"

namespace removal {

// Exact nonnegative rational on 128-bit components, always normalized
// (gcd 1, positive denominator).  File formats emit these verbatim as
// "num/den"; they are never converted to floats on the way out.
struct Rational {
    i128 num = 0;
    i128 den = 1;

    static Rational of(i128 n, i128 d);
    static Rational integer(i128 n) { return Rational{n, 1}; }

    Rational mul(const Rational& o) const;
    Rational pow(unsigned k) const;

    double to_double() const;
    std::string str() const;  // "num/den"

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

}  // namespace removal
