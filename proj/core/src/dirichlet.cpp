#include "invlab/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "invlab/error.hpp"
#include "invlab/special.hpp"

namespace invlab::dirichlet {

namespace {

u64 inverse_mod(u64 a, u64 m) {
    // Extended Euclid on signed 128-bit to avoid overflow for 64-bit moduli.
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 quotient = old_r / r;
        old_r -= quotient * r;
        std::swap(old_r, r);
        old_s -= quotient * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) throw DomainError("inverse_mod: not invertible");
    __int128 inv = old_s % static_cast<__int128>(m);
    if (inv < 0) inv += m;
    return static_cast<u64>(inv);
}

// The residue x mod q with x = c mod pk and x = 1 mod q/pk.
u64 crt_lift(u64 c, u64 pk, u64 q) {
    const u64 rest = q / pk;
    if (rest == 1) return c % q;
    const u64 c_minus_1 = (c % pk + pk - 1) % pk;
    const u64 t = arith::mulmod(c_minus_1, inverse_mod(rest % pk, pk), pk);
    return (1 + arith::mulmod(t, rest, q)) % q;
}

}  // namespace

UnitGroupBasis::UnitGroupBasis(u64 q) : q_(q) {
    if (q < 3) throw DomainError("unit group basis needs q >= 3");
    const arith::Factorization f = arith::factorize(q);
    phi_ = arith::euler_phi(f);
    for (const auto& [p, e] : f.factors) {
        const u64 pk = *arith::checked_pow(p, e);
        if (p == 2) {
            if (e >= 2) generators_.push_back({crt_lift(pk - 1, pk, q), 2});
            if (e >= 3) generators_.push_back({crt_lift(5, pk, q), pk / 4});
            continue;
        }
        generators_.push_back({crt_lift(arith::primitive_root(pk), pk, q), pk / p * (p - 1)});
    }
    for (const auto& g : generators_) exponent_ = std::lcm(exponent_, g.order);

    unit_.assign(q, false);
    const std::size_t k = generators_.size();
    dlog_.assign(q * k, 0);
    std::vector<std::uint32_t> digits(k, 0);
    u64 visited = 0;
    for (u64 idx = 0; idx < phi_; ++idx) {
        u64 value = 1 % q;
        for (std::size_t i = 0; i < k; ++i) {
            value = arith::mulmod(value, arith::powmod(generators_[i].residue, digits[i], q), q);
        }
        if (unit_[value]) throw ConsistencyError("unit group basis: generators are dependent");
        unit_[value] = true;
        std::copy(digits.begin(), digits.end(), dlog_.begin() + static_cast<std::ptrdiff_t>(value * k));
        ++visited;
        for (std::size_t i = 0; i < k; ++i) {
            if (++digits[i] < generators_[i].order) break;
            digits[i] = 0;
        }
    }
    if (visited != phi_) throw ConsistencyError("unit group basis: wrong group order");
}

std::span<const std::uint32_t> UnitGroupBasis::dlog(u64 a) const {
    a %= q_;
    if (!unit_[a]) throw DomainError("dlog: " + std::to_string(a) + " is not a unit mod " + std::to_string(q_));
    const std::size_t k = generators_.size();
    return {dlog_.data() + a * k, k};
}

std::complex<double> Rotation::to_complex() const {
    if (numerator == 0) return 1.0;
    if (2 * numerator == denominator) return -1.0;
    if (4 * numerator == denominator) return {0.0, 1.0};
    if (4 * numerator == 3 * denominator) return {0.0, -1.0};
    const double angle = 2.0 * special::kPi * static_cast<double>(numerator) / static_cast<double>(denominator);
    return std::polar(1.0, angle);
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroupBasis> basis, std::vector<u64> twist)
    : basis_(std::move(basis)), twist_(std::move(twist)) {
    const auto& gens = basis_->generators();
    if (twist_.size() != gens.size()) throw DomainError("character twist length mismatch");
    for (std::size_t i = 0; i < gens.size(); ++i) twist_[i] %= gens[i].order;
}

bool DirichletCharacter::is_principal() const {
    return std::all_of(twist_.begin(), twist_.end(), [](u64 t) { return t == 0; });
}

bool DirichletCharacter::is_real() const {
    const auto& gens = basis_->generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if ((2 * twist_[i]) % gens[i].order != 0) return false;
    }
    return true;
}

Rotation DirichletCharacter::rotation(u64 a) const {
    const auto exps = basis_->dlog(a);
    const auto& gens = basis_->generators();
    const u64 lambda = basis_->exponent();
    u64 num = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const u64 step = lambda / gens[i].order;
        num = (num + arith::mulmod(twist_[i] * exps[i] % gens[i].order, step, lambda)) % lambda;
    }
    const u64 g = std::gcd(num, lambda);
    return {num / g, lambda / g};
}

std::complex<double> DirichletCharacter::operator()(u64 a) const {
    if (vanishes_at(a)) return 0.0;
    return rotation(a).to_complex();
}

DirichletCharacter DirichletCharacter::conj() const {
    std::vector<u64> t = twist_;
    const auto& gens = basis_->generators();
    for (std::size_t i = 0; i < gens.size(); ++i) t[i] = (gens[i].order - t[i]) % gens[i].order;
    return {basis_, std::move(t)};
}

std::vector<DirichletCharacter> character_table(u64 q) {
    auto basis = std::make_shared<const UnitGroupBasis>(q);
    const auto& gens = basis->generators();
    std::vector<DirichletCharacter> table;
    table.reserve(basis->phi());
    std::vector<u64> twist(gens.size(), 0);
    for (u64 idx = 0; idx < basis->phi(); ++idx) {
        table.emplace_back(basis, twist);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (++twist[i] < gens[i].order) break;
            twist[i] = 0;
        }
    }
    return table;
}

LValueEvaluator::LValueEvaluator(u64 q) : q_(q), psi_(q, 0.0) {
    if (q < 3) throw DomainError("L-values need q >= 3");
    for (u64 a = 1; a < q; ++a) psi_[a] = special::digamma_rational(a, q);
}

std::complex<double> LValueEvaluator::L1(const DirichletCharacter& chi) const {
    if (chi.modulus() != q_) throw DomainError("L1: character modulus does not match evaluator");
    if (chi.is_principal()) throw DomainError("L1: principal character has a pole at s = 1");
    std::complex<double> sum = 0.0;
    for (u64 a = 1; a < q_; ++a) {
        if (chi.vanishes_at(a)) continue;
        sum += chi(a) * psi_[a];
    }
    return -sum / static_cast<double>(q_);
}

std::complex<double> L1(const DirichletCharacter& chi) {
    return LValueEvaluator(chi.modulus()).L1(chi);
}

}  // namespace invlab::dirichlet
