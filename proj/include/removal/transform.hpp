#pragma once

#include <cstdint>
#include <vector>

#include "removal/fpn.hpp"
#include "removal/int128.hpp"

namespace removal {

/// One exact-arithmetic channel: an odd prime q = 1 (mod p) together with a
/// primitive p-th root of unity mod q.
struct ModulusChannel {
    std::uint64_t q;
    std::uint64_t omega;
    std::uint64_t omega_inv;
};

/// Channels whose product exceeds the value bound; one channel when a single
/// prime suffices, two with remainder combination otherwise.
struct TransformPlan {
    unsigned p;
    std::vector<ModulusChannel> channels;
};

// Largest usable primes below 2^bit_budget congruent to 1 mod p.  Throws
// CapacityError when even two such primes cannot cover the bound.
TransformPlan plan_transform(unsigned p, u128 value_bound, unsigned bit_budget = 62);

// In-place length-p DFT along every axis of the n-dimensional array (size
// N = p^n), all arithmetic mod ch.q.  inverse=true also applies the 1/p^n
// normalization.
void group_dft(const GroupParams& g, std::vector<std::uint64_t>& data,
               const ModulusChannel& ch, bool inverse);

// Exact group convolution (1_a * 1_b) over F_p^n computed mod ch.q.
std::vector<std::uint64_t> convolve_mod(const GroupParams& g,
                                        const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b,
                                        const ModulusChannel& ch);

// CRT combination of residues under two coprime moduli; result < q1*q2.
u128 crt_pair(std::uint64_t r1, std::uint64_t q1, std::uint64_t r2, std::uint64_t q2);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
bool is_prime_u64(std::uint64_t v);

}  // namespace removal
