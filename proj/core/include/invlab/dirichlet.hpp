#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "invlab/arith.hpp"

namespace invlab::dirichlet {

using arith::u64;

struct Generator {
    u64 residue;  // reduced residue mod q
    u64 order;
};

/// Explicit basis of (Z/qZ)^x = prod <g_i>, built over the prime powers of q
/// and lifted by CRT, with a discrete-log table for every reduced residue.
class UnitGroupBasis {
public:
    explicit UnitGroupBasis(u64 q);

    [[nodiscard]] u64 modulus() const { return q_; }
    [[nodiscard]] u64 phi() const { return phi_; }
    /// lcm of the generator orders.
    [[nodiscard]] u64 exponent() const { return exponent_; }
    [[nodiscard]] const std::vector<Generator>& generators() const { return generators_; }
    [[nodiscard]] bool is_unit(u64 a) const { return unit_[a % q_]; }

    /// Exponent vector of a (mod q) in terms of the generators. a must be a unit.
    [[nodiscard]] std::span<const std::uint32_t> dlog(u64 a) const;

private:
    u64 q_;
    u64 phi_;
    u64 exponent_ = 1;
    std::vector<Generator> generators_;
    std::vector<bool> unit_;
    std::vector<std::uint32_t> dlog_;  // q_ rows of generators_.size() entries
};

/// exp(2 pi i numerator / denominator), reduced.
struct Rotation {
    u64 numerator = 0;
    u64 denominator = 1;

    [[nodiscard]] std::complex<double> to_complex() const;
    friend bool operator==(const Rotation&, const Rotation&) = default;
};

/// chi(a) = exp(2 pi i sum_i t_i a_i / e_i) where a = prod g_i^{a_i}, and 0
/// when gcd(a, q) > 1.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroupBasis> basis, std::vector<u64> twist);

    [[nodiscard]] u64 modulus() const { return basis_->modulus(); }
    [[nodiscard]] const std::vector<u64>& twist() const { return twist_; }
    [[nodiscard]] const UnitGroupBasis& basis() const { return *basis_; }
    [[nodiscard]] bool is_principal() const;
    [[nodiscard]] bool is_real() const;

    [[nodiscard]] bool vanishes_at(u64 a) const { return !basis_->is_unit(a); }
    /// Exact value at a unit as a fraction of a turn. Non-units throw DomainError.
    [[nodiscard]] Rotation rotation(u64 a) const;
    [[nodiscard]] std::complex<double> operator()(u64 a) const;

    [[nodiscard]] DirichletCharacter conj() const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus() == b.modulus() && a.twist_ == b.twist_;
    }

private:
    std::shared_ptr<const UnitGroupBasis> basis_;
    std::vector<u64> twist_;
};

/// All phi(q) characters mod q; the principal character comes first.
std::vector<DirichletCharacter> character_table(u64 q);

/// L(1, chi) = -(1/q) sum_{a=1}^{q-1} chi(a) psi(a/q), with the digamma values
/// cached per modulus.
class LValueEvaluator {
public:
    explicit LValueEvaluator(u64 q);

    [[nodiscard]] u64 modulus() const { return q_; }
    [[nodiscard]] std::complex<double> L1(const DirichletCharacter& chi) const;

private:
    u64 q_;
    std::vector<double> psi_;  // psi_[a] = psi(a/q), a = 1..q-1
};

/// L(1, chi) for a non-principal character. Throws DomainError for chi_0.
std::complex<double> L1(const DirichletCharacter& chi);

}  // namespace invlab::dirichlet
