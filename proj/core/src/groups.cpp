#include "invlab/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "invlab/error.hpp"

namespace invlab::groups {

u64 InvariantFactors::order() const {
    u64 product = 1;
    for (u64 d : chain) product *= d;
    return product;
}

CyclicDecomposition unit_group_cyclic_orders(const arith::Factorization& f) {
    CyclicDecomposition c;
    for (const auto& [p, e] : f.factors) {
        if (p == 2) {
            if (e == 1) {
                c.orders.push_back(1);
            } else if (e == 2) {
                c.orders.push_back(2);
            } else {
                c.orders.push_back(2);
                c.orders.push_back(u64{1} << (e - 2));
            }
            continue;
        }
        u64 phi = p - 1;
        for (unsigned i = 1; i < e; ++i) phi *= p;
        c.orders.push_back(phi);
    }
    return c;
}

InvariantFactors invariant_factors(const CyclicDecomposition& c) {
    std::map<u64, std::vector<unsigned>> parts;
    for (u64 m : c.orders) {
        if (m == 0) throw DomainError("invariant_factors: cyclic order must be positive");
        if (m == 1) continue;
        for (const auto& [p, e] : arith::factorize(m).factors) parts[p].push_back(e);
    }
    std::size_t length = 0;
    for (auto& [p, exps] : parts) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        length = std::max(length, exps.size());
    }
    // Slot j holds the j-th largest factor; missing parts count as p^0.
    std::vector<u64> descending(length, 1);
    for (const auto& [p, exps] : parts) {
        for (std::size_t j = 0; j < exps.size(); ++j) {
            for (unsigned k = 0; k < exps[j]; ++k) descending[j] *= p;
        }
    }
    InvariantFactors result;
    for (auto it = descending.rbegin(); it != descending.rend(); ++it) {
        if (*it > 1) result.chain.push_back(*it);
    }
    return result;
}

InvariantFactors unit_group_structure(u64 n) {
    return invariant_factors(unit_group_cyclic_orders(arith::factorize(n)));
}

u64 lambda1(const arith::Factorization& f) {
    return invariant_factors(unit_group_cyclic_orders(f)).smallest();
}

u64 lambda1(u64 n) { return lambda1(arith::factorize(n)); }

u64 carmichael(u64 n) { return unit_group_structure(n).largest(); }

u64 least_primary_factor(const CyclicDecomposition& c) {
    u64 best = 0;
    for (u64 m : c.orders) {
        if (m == 1) continue;
        for (const auto& [p, e] : arith::factorize(m).factors) {
            u64 pe = 1;
            for (unsigned k = 0; k < e; ++k) pe *= p;
            if (best == 0 || pe < best) best = pe;
        }
    }
    return best == 0 ? 1 : best;
}

u64 least_primary_factor(u64 n) {
    return least_primary_factor(unit_group_cyclic_orders(arith::factorize(n)));
}

bool q_divides_lambda1_structural(const CyclicDecomposition& c, u64 q) {
    if (q == 0) throw DomainError("q must be positive");
    u64 g = 0;
    for (u64 m : c.orders) g = std::gcd(g, m);
    if (g <= 1) {
        throw PreconditionError("gcd of cyclic orders must exceed 1 for the structural criterion");
    }
    return invariant_factors(c).smallest() % q == 0;
}

DivisibilityPredicate::DivisibilityPredicate(u64 q) : q_(q) {
    if (q < 4 || q % 2 != 0) {
        throw DomainError("divisibility predicate needs even q >= 4, got " + std::to_string(q));
    }
    for (const auto& [p, r] : arith::factorize(q).factors) {
        if (p == 2) continue;
        u64 pr = 1;
        for (unsigned k = 0; k < r; ++k) pr *= p;
        const u64 q_without_p = q / pr;
        odd_divisors_.push_back({p, r, (p - 1) % q_without_p == 0});
    }
}

bool DivisibilityPredicate::operator()(const arith::Factorization& f) const {
    if (f.n <= 2) return false;
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [this](const arith::PrimePower& pp) { return admits(pp.prime, pp.exponent); });
}

bool divides_lambda1_fast(const arith::Factorization& f, u64 q) {
    return DivisibilityPredicate(q)(f);
}

}  // namespace invlab::groups
