#pragma once

#include <cstdint>
#include <string>

namespace removal {

using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string(u128 v);
std::string to_string(i128 v);

// (a * b) with overflow detection; returns false on overflow.
bool mul_overflow(u128 a, u128 b, u128& out);

// Exact integer power with overflow detection.
bool pow_overflow(u128 base, unsigned exp, u128& out);

i128 gcd128(i128 a, i128 b);

}  // namespace removal
