#pragma once

#include <cstdint>
#include <vector>

#include "invlab/arith.hpp"

namespace invlab::groups {

using arith::u64;

/// Orders m_1, ..., m_l of cyclic direct factors, in no particular order.
/// Entries equal to 1 are allowed.
struct CyclicDecomposition {
    std::vector<u64> orders;
};

/// Canonical chain d_1 | d_2 | ... | d_l with every d_i >= 2. Empty for the
/// trivial group.
struct InvariantFactors {
    std::vector<u64> chain;

    [[nodiscard]] u64 smallest() const { return chain.empty() ? 1 : chain.front(); }
    [[nodiscard]] u64 largest() const { return chain.empty() ? 1 : chain.back(); }
    [[nodiscard]] u64 order() const;
};

/// CRT decomposition of (Z/nZ)^x: phi(p^v) for odd p^v || n, and for the
/// power of two 2 -> {1}, 4 -> {2}, 2^r (r >= 3) -> {2, 2^(r-2)}.
CyclicDecomposition unit_group_cyclic_orders(const arith::Factorization& f);

/// Aligns the p-parts of all orders, largest first, prime by prime; the j-th
/// largest invariant factor collects the j-th largest part of every prime.
InvariantFactors invariant_factors(const CyclicDecomposition& c);

/// Invariant factor chain of (Z/nZ)^x.
InvariantFactors unit_group_structure(u64 n);

/// Least invariant factor of (Z/nZ)^x; 1 for n in {1, 2}.
u64 lambda1(u64 n);
u64 lambda1(const arith::Factorization& f);

/// Group exponent of (Z/nZ)^x; 1 for n in {1, 2}.
u64 carmichael(u64 n);

/// Smallest prime-power order in the primary decomposition; 1 for trivial groups.
u64 least_primary_factor(u64 n);
u64 least_primary_factor(const CyclicDecomposition& c);

/// q | lambda_1(G) for G given by c. Requires gcd(c.orders) > 1, otherwise
/// throws PreconditionError.
bool q_divides_lambda1_structural(const CyclicDecomposition& c, u64 q);

/// Conditions on the prime factorization of n equivalent to q | lambda_1(n),
/// for even q >= 4. Precomputes q_(p) for the odd primes dividing q.
class DivisibilityPredicate {
public:
    explicit DivisibilityPredicate(u64 q);

    [[nodiscard]] u64 modulus() const { return q_; }

    /// Whether the prime power p^e || n is compatible with q | lambda_1(n).
    [[nodiscard]] bool admits(u64 p, unsigned e) const {
        if (p == 2) return e == 1;
        if (q_ % p != 0) return p % q_ == 1;
        for (const auto& d : odd_divisors_) {
            if (d.prime == p) return d.cofactor_divides_p_minus_1 && e >= d.exponent + 1;
        }
        return false;
    }

    /// Evaluates all conditions. n in {1, 2} is rejected (trivial group).
    [[nodiscard]] bool operator()(const arith::Factorization& f) const;

private:
    struct OddDivisor {
        u64 prime;
        unsigned exponent;  // p^r || q
        bool cofactor_divides_p_minus_1;  // q_(p) | p - 1
    };
    u64 q_;
    std::vector<OddDivisor> odd_divisors_;
};

/// q | lambda_1(n) through the factorization conditions. q must be even and
/// >= 4 (DomainError otherwise); false for n in {1, 2}.
bool divides_lambda1_fast(const arith::Factorization& f, u64 q);

/// Streaming evaluation of lambda_1(n) from the prime powers of n, without
/// factoring the orders phi(p^v). For n >= 3 every nontrivial cyclic order is
/// even, so the least invariant factor is the gcd of the orders.
class Lambda1Accumulator {
public:
    void add(u64 p, unsigned e) {
        if (p == 2) {
            two_exponent_ = e;
            if (e >= 2) least_primary_two_ = true;
            return;
        }
        u64 order = p - 1;
        for (unsigned i = 1; i < e; ++i) order *= p;
        gcd_ = gcd_ == 0 ? order : gcd_u64(gcd_, order);
        if (p % 4 == 3) least_primary_two_ = true;
    }

    /// True once lambda_1 is known to be 2 regardless of further factors.
    [[nodiscard]] bool settled_at_two() const { return two_exponent_ >= 2 || gcd_ == 2; }

    [[nodiscard]] u64 value() const {
        if (two_exponent_ >= 2) return 2;
        return gcd_ == 0 ? 1 : gcd_;
    }

    /// Whether some cyclic order has 2-part exactly 2, i.e. the least primary
    /// factor is 2.
    [[nodiscard]] bool least_primary_is_two() const { return least_primary_two_; }

private:
    static u64 gcd_u64(u64 a, u64 b) {
        while (b != 0) {
            const u64 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    unsigned two_exponent_ = 0;
    u64 gcd_ = 0;
    bool least_primary_two_ = false;
};

}  // namespace invlab::groups
