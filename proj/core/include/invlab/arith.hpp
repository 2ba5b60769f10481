#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace invlab::arith {

using u64 = std::uint64_t;

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization n = prod p_i^{e_i}, primes strictly increasing.
/// The empty list represents n = 1.
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;

    [[nodiscard]] bool divisible_by(u64 p) const;
    [[nodiscard]] unsigned exponent_of(u64 p) const;
};

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// base^exp, or nullopt when the result does not fit in 64 bits.
std::optional<u64> checked_pow(u64 base, unsigned exp);

/// Deterministic for every 64-bit input.
bool is_prime(u64 n);

/// Trial division. n == 0 is rejected with DomainError.
Factorization factorize(u64 n);

u64 euler_phi(const Factorization& f);
u64 euler_phi(u64 n);

/// All primes <= limit in increasing order.
std::vector<std::uint32_t> primes_up_to(u64 limit);

/// Least-prime-factor table over the half-open range [lo, hi).
class SieveSegment {
public:
    SieveSegment(u64 lo, u64 hi, std::vector<std::uint32_t> lpf);

    [[nodiscard]] u64 lo() const { return lo_; }
    [[nodiscard]] u64 hi() const { return hi_; }
    [[nodiscard]] u64 size() const { return hi_ - lo_; }
    [[nodiscard]] bool contains(u64 n) const { return n >= lo_ && n < hi_; }

    /// Least prime factor of n; lpf(1) == 1.
    [[nodiscard]] u64 lpf(u64 n) const;

private:
    u64 lo_;
    u64 hi_;
    // 0 marks "no base prime divides n", i.e. n itself is prime.
    std::vector<std::uint32_t> lpf_;
};

/// Sieve [lo, hi) using base_primes, which must be sorted and contain every
/// prime <= sqrt(hi - 1). Throws ConfigError when they do not.
SieveSegment lpf_segment(u64 lo, u64 hi, std::span<const std::uint32_t> base_primes);

/// Complete factorizations for every integer of [lo, hi), produced by sieving
/// prime powers with the base primes. Each n is split into the prime powers
/// p^e with p <= sqrt(hi - 1) plus at most one larger prime cofactor.
class FactorSegment {
public:
    FactorSegment(u64 lo, u64 hi, std::span<const std::uint32_t> base_primes);

    [[nodiscard]] u64 lo() const { return lo_; }
    [[nodiscard]] u64 hi() const { return hi_; }

    struct Entry {
        u64 n;
        std::span<const std::uint32_t> small_primes;
        std::span<const std::uint8_t> small_exponents;
        u64 large_prime;  // 1 when n has no prime factor above the base range
    };

    [[nodiscard]] Entry at(u64 n) const;

    /// The entry as a Factorization.
    [[nodiscard]] Factorization factorization(u64 n) const;

private:
    u64 lo_;
    u64 hi_;
    unsigned slots_;
    std::vector<std::uint8_t> count_;
    std::vector<std::uint32_t> primes_;
    std::vector<std::uint8_t> exponents_;
    std::vector<u64> cofactor_;
};

/// Largest number of distinct prime factors of any integer below hi.
unsigned max_distinct_prime_factors(u64 hi);

/// Smallest k >= 1 with a^k == 1 (mod q). Requires q >= 2 and gcd(a, q) = 1.
u64 ord_mod(u64 a, u64 q);

/// Same, reusing a precomputed factorization of phi(q).
u64 ord_mod(u64 a, u64 q, u64 phi_q, const Factorization& phi_factors);

/// A generator of (Z/p^kZ)^x for an odd prime power p^k.
u64 primitive_root(u64 prime_power);

}  // namespace invlab::arith
