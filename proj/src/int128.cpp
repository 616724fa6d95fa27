#include "removal/int128.hpp"

#include <algorithm>

namespace removal {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(i128 v) {
    if (v < 0) return "-" + to_string(static_cast<u128>(-v));
    return to_string(static_cast<u128>(v));
}

bool mul_overflow(u128 a, u128 b, u128& out) {
    if (a != 0 && b > static_cast<u128>(-1) / a) return false;
    out = a * b;
    return true;
}

bool pow_overflow(u128 base, unsigned exp, u128& out) {
    u128 r = 1;
    while (exp > 0) {
        if (exp & 1u) {
            if (!mul_overflow(r, base, r)) return false;
        }
        exp >>= 1u;
        if (exp > 0 && !mul_overflow(base, base, base)) return false;
    }
    out = r;
    return true;
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace removal
