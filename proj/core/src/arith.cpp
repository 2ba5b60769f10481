#include "invlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "invlab/error.hpp"

namespace invlab::arith {

bool Factorization::divisible_by(u64 p) const { return exponent_of(p) > 0; }

unsigned Factorization::exponent_of(u64 p) const {
    for (const auto& pp : factors) {
        if (pp.prime == p) return pp.exponent;
        if (pp.prime > p) break;
    }
    return 0;
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
    u64 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(result, base, &result)) return std::nullopt;
    }
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    if (n < 37 * 37) return true;
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic below 3.3e24.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    Factorization f;
    f.n = n;
    auto take = [&](u64 p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) f.factors.push_back({p, e});
    };
    take(2);
    take(3);
    for (u64 p = 5; p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

u64 euler_phi(const Factorization& f) {
    u64 phi = 1;
    for (const auto& [p, e] : f.factors) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

std::vector<std::uint32_t> primes_up_to(u64 limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    // Odd-only sieve: index i stands for 2i + 1.
    const u64 half = limit / 2 + 1;
    std::vector<bool> composite(half, false);
    primes.push_back(2);
    for (u64 i = 1; i < half; ++i) {
        const u64 p = 2 * i + 1;
        if (p > limit) break;
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(p));
        for (u64 m = p * p; m <= limit; m += 2 * p) composite[m / 2] = true;
    }
    return primes;
}

namespace {

u64 isqrt(u64 n) {
    auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Every prime <= sqrt(hi - 1) must be in base_primes. The list is assumed to
// be an initial run of the primes, so checking its end suffices.
void require_base_primes(u64 hi, std::span<const std::uint32_t> base_primes) {
    if (!std::is_sorted(base_primes.begin(), base_primes.end())) {
        throw ConfigError("base primes must be sorted");
    }
    const u64 root = isqrt(hi - 1);
    if (root < 2) return;
    u64 next = base_primes.empty() ? 2 : static_cast<u64>(base_primes.back()) + 1;
    while (!is_prime(next)) ++next;
    if (next <= root) {
        throw ConfigError("insufficient base primes: need every prime up to " + std::to_string(root));
    }
}

}  // namespace

SieveSegment::SieveSegment(u64 lo, u64 hi, std::vector<std::uint32_t> lpf)
    : lo_(lo), hi_(hi), lpf_(std::move(lpf)) {}

u64 SieveSegment::lpf(u64 n) const {
    if (!contains(n)) throw DomainError("lpf: " + std::to_string(n) + " outside segment");
    if (n == 1) return 1;
    const std::uint32_t v = lpf_[n - lo_];
    return v == 0 ? n : v;
}

SieveSegment lpf_segment(u64 lo, u64 hi, std::span<const std::uint32_t> base_primes) {
    if (lo < 2 || hi <= lo) throw ConfigError("lpf_segment: need 2 <= lo < hi");
    require_base_primes(hi, base_primes);
    std::vector<std::uint32_t> lpf(hi - lo, 0);
    for (const std::uint32_t p32 : base_primes) {
        const u64 p = p32;
        if (p * p >= hi) break;
        u64 start = std::max(p * p, (lo + p - 1) / p * p);
        for (u64 m = start; m < hi; m += p) {
            if (lpf[m - lo] == 0) lpf[m - lo] = p32;
        }
    }
    return SieveSegment(lo, hi, std::move(lpf));
}

unsigned max_distinct_prime_factors(u64 hi) {
    static constexpr u64 kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    unsigned count = 0;
    u64 primorial = 1;
    for (u64 p : kPrimes) {
        if (__builtin_mul_overflow(primorial, p, &primorial) || primorial >= hi) break;
        ++count;
    }
    return std::max(count, 1u);
}

FactorSegment::FactorSegment(u64 lo, u64 hi, std::span<const std::uint32_t> base_primes)
    : lo_(lo), hi_(hi), slots_(max_distinct_prime_factors(hi)) {
    if (lo < 1 || hi <= lo) throw ConfigError("FactorSegment: need 1 <= lo < hi");
    require_base_primes(hi, base_primes);
    const u64 len = hi - lo;
    count_.assign(len, 0);
    primes_.resize(len * slots_);
    exponents_.resize(len * slots_);
    // Holds the product of the sieved prime powers until the final pass.
    cofactor_.assign(len, 1);

    for (const std::uint32_t p32 : base_primes) {
        const u64 p = p32;
        if (p * p >= hi) break;
        for (u64 m = (lo + p - 1) / p * p; m < hi; m += p) {
            const u64 i = m - lo;
            const unsigned c = count_[i]++;
            primes_[i * slots_ + c] = p32;
            exponents_[i * slots_ + c] = 1;
            cofactor_[i] *= p;
        }
        // Higher powers: the entry for p is the most recent one in each slot list.
        u64 pk = p;
        while (pk <= (hi - 1) / p) {
            pk *= p;
            for (u64 m = (lo + pk - 1) / pk * pk; m < hi; m += pk) {
                const u64 i = m - lo;
                ++exponents_[i * slots_ + count_[i] - 1];
                cofactor_[i] *= p;
            }
        }
    }
    for (u64 i = 0; i < len; ++i) cofactor_[i] = (lo + i) / cofactor_[i];
}

FactorSegment::Entry FactorSegment::at(u64 n) const {
    const u64 i = n - lo_;
    const std::size_t off = i * slots_;
    return Entry{n,
                 std::span<const std::uint32_t>(primes_.data() + off, count_[i]),
                 std::span<const std::uint8_t>(exponents_.data() + off, count_[i]),
                 cofactor_[i]};
}

Factorization FactorSegment::factorization(u64 n) const {
    if (n < lo_ || n >= hi_) throw DomainError("FactorSegment: n outside segment");
    const Entry e = at(n);
    Factorization f;
    f.n = n;
    for (std::size_t k = 0; k < e.small_primes.size(); ++k) {
        f.factors.push_back({e.small_primes[k], e.small_exponents[k]});
    }
    if (e.large_prime > 1) f.factors.push_back({e.large_prime, 1});
    return f;
}

u64 ord_mod(u64 a, u64 q, u64 phi_q, const Factorization& phi_factors) {
    if (q < 2) throw DomainError("ord_mod: modulus must be >= 2");
    a %= q;
    if (std::gcd(a, q) != 1) {
        throw DomainError("ord_mod: " + std::to_string(a) + " not coprime to " + std::to_string(q));
    }
    u64 order = phi_q;
    for (const auto& [r, e] : phi_factors.factors) {
        for (unsigned i = 0; i < e && order % r == 0; ++i) {
            if (powmod(a, order / r, q) != 1) break;
            order /= r;
        }
    }
    return order;
}

u64 ord_mod(u64 a, u64 q) {
    if (q < 2) throw DomainError("ord_mod: modulus must be >= 2");
    const u64 phi = euler_phi(q);
    return ord_mod(a, q, phi, factorize(phi));
}

u64 primitive_root(u64 prime_power) {
    if (prime_power < 3 || prime_power % 2 == 0) {
        throw DomainError("primitive_root: need an odd prime power");
    }
    const Factorization f = factorize(prime_power);
    if (f.factors.size() != 1) throw DomainError("primitive_root: modulus is not a prime power");
    const u64 phi = euler_phi(f);
    const Factorization phi_factors = factorize(phi);
    for (u64 g = 2; g < prime_power; ++g) {
        if (g % f.factors[0].prime == 0) continue;
        if (ord_mod(g, prime_power, phi, phi_factors) == phi) return g;
    }
    throw DomainError("primitive_root: none found");  // unreachable for odd prime powers
}

}  // namespace invlab::arith
