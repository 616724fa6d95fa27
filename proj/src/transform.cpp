#include "removal/transform.hpp"

#include <map>
#include <mutex>

#include "removal/errors.hpp"

namespace removal {

namespace {

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t q) {
    return mod_pow(a, q - 2, q);  // q prime
}

std::uint64_t find_primitive_pth_root(unsigned p, std::uint64_t q) {
    // a^((q-1)/p) has order p whenever it is not 1 (p prime).
    std::uint64_t e = (q - 1) / p;
    for (std::uint64_t a = 2;; ++a) {
        std::uint64_t w = mod_pow(a, e, q);
        if (w != 1) return w;
    }
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1u) r = mod_mul(r, base, mod);
        base = mod_mul(base, base, mod);
        exp >>= 1u;
    }
    return r;
}

bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (v % s == 0) return v == s;
    }
    std::uint64_t d = v - 1;
    unsigned r = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++r;
    }
    // deterministic Miller-Rabin base set for 64-bit integers
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = mod_pow(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mod_mul(x, x, v);
            if (x == v - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

// Two largest primes q = 1 (mod p) below 2^bit_budget with their primitive
// p-th roots; found once and cached.
const std::vector<ModulusChannel>& modulus_table(unsigned p, unsigned bit_budget) {
    static std::map<std::pair<unsigned, unsigned>, std::vector<ModulusChannel>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace({p, bit_budget});
    if (inserted) {
        std::vector<ModulusChannel>& channels = it->second;
        std::uint64_t top = (1ull << bit_budget) - 1;
        std::uint64_t q = top - ((top - 1) % p);
        while (channels.size() < 2 && q > static_cast<std::uint64_t>(p)) {
            if (q % 2 == 1 && is_prime_u64(q)) {
                std::uint64_t w = find_primitive_pth_root(p, q);
                channels.push_back(ModulusChannel{q, w, mod_inv(w, q)});
            }
            q -= p;
        }
    }
    return it->second;
}

}  // namespace

TransformPlan plan_transform(unsigned p, u128 value_bound, unsigned bit_budget) {
    if (bit_budget < 8 || bit_budget > 62) throw ValidationError("bit budget must be in [8, 62]");
    const std::vector<ModulusChannel>& table = modulus_table(p, bit_budget);
    TransformPlan plan{p, {}};
    if (!table.empty() && static_cast<u128>(table[0].q) > value_bound) {
        plan.channels.assign(table.begin(), table.begin() + 1);
        return plan;
    }
    if (table.size() == 2) {
        u128 prod = static_cast<u128>(table[0].q) * table[1].q;
        if (prod > value_bound) {
            plan.channels = table;
            return plan;
        }
    }
    throw CapacityError("no admissible modulus plan under the configured bit budget");
}

void group_dft(const GroupParams& g, std::vector<std::uint64_t>& data,
               const ModulusChannel& ch, bool inverse) {
    const unsigned p = g.p();
    const std::uint64_t N = g.order();
    const std::uint64_t q = ch.q;
    std::uint64_t w = inverse ? ch.omega_inv : ch.omega;

    // twiddle table W[r][j] = w^{r j}
    std::vector<std::uint64_t> W(static_cast<std::size_t>(p) * p);
    for (unsigned r = 0; r < p; ++r)
        for (unsigned j = 0; j < p; ++j)
            W[r * p + j] = mod_pow(w, static_cast<std::uint64_t>(r) * j, q);

    std::vector<std::uint64_t> line(p), out(p);
    for (unsigned axis = 0; axis < g.n(); ++axis) {
        const std::uint64_t stride = g.pow_p(axis);
        const std::uint64_t block = stride * p;
        for (std::uint64_t base = 0; base < N; base += block) {
            for (std::uint64_t off = 0; off < stride; ++off) {
                const std::uint64_t start = base + off;
                for (unsigned j = 0; j < p; ++j) line[j] = data[start + j * stride];
                for (unsigned r = 0; r < p; ++r) {
                    u128 acc = 0;
                    const std::uint64_t* row = &W[r * p];
                    for (unsigned j = 0; j < p; ++j)
                        acc += static_cast<u128>(row[j]) * line[j];
                    out[r] = static_cast<std::uint64_t>(acc % q);
                }
                for (unsigned r = 0; r < p; ++r) data[start + r * stride] = out[r];
            }
        }
    }

    if (inverse) {
        std::uint64_t n_inv = mod_inv(N % q, q);
        for (auto& v : data) v = mod_mul(v, n_inv, q);
    }
}

std::vector<std::uint64_t> convolve_mod(const GroupParams& g,
                                        const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b,
                                        const ModulusChannel& ch) {
    std::vector<std::uint64_t> fa(a), fb(b);
    group_dft(g, fa, ch, false);
    group_dft(g, fb, ch, false);
    for (std::size_t i = 0; i < fa.size(); ++i)
        fa[i] = mod_mul(fa[i], fb[i], ch.q);
    group_dft(g, fa, ch, true);
    return fa;
}

u128 crt_pair(std::uint64_t r1, std::uint64_t q1, std::uint64_t r2, std::uint64_t q2) {
    // x = r1 + q1 * ((r2 - r1) * q1^{-1} mod q2), unique below q1*q2
    std::uint64_t inv = mod_pow(q1 % q2, q2 - 2, q2);
    std::uint64_t diff = (r2 + q2 - r1 % q2) % q2;
    std::uint64_t k = mod_mul(diff, inv, q2);
    return static_cast<u128>(q1) * k + r1;
}

}  // namespace removal
