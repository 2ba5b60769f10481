#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invlab/arith.hpp"

namespace invlab::constants {

using arith::u64;

inline constexpr u64 kDefaultCutoff = 10'000'000;

/// A truncated Euler-product constant. error_bound is an absolute bound on
/// |value - exact| from the prime tail p > truncation_P (plus a small
/// floating-point allowance).
struct ConstantEstimate {
    double value = 0.0;
    double error_bound = 0.0;
    u64 truncation_P = 0;
};

/// A nonempty set B of reduced residues mod q.
class ResidueClassSet {
public:
    ResidueClassSet(u64 q, std::vector<u64> members);

    /// Every reduced residue except those in this set. Throws DomainError if
    /// that would be empty.
    [[nodiscard]] ResidueClassSet complement() const;

    /// All reduced residues mod q.
    static ResidueClassSet all(u64 q);

    [[nodiscard]] u64 modulus() const { return q_; }
    [[nodiscard]] u64 phi() const { return phi_; }
    [[nodiscard]] const std::vector<u64>& members() const { return members_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool contains(u64 a) const { return in_set_[a % q_]; }
    [[nodiscard]] double beta() const { return static_cast<double>(size()) / static_cast<double>(phi_); }
    [[nodiscard]] std::size_t underline_B() const;

private:
    u64 q_;
    u64 phi_;
    std::vector<u64> members_;
    std::vector<bool> in_set_;
};

double gamma_real(double x);

/// Primes <= P, shared across calls.
std::span<const std::uint32_t> primes_through(u64 P);

/// prod over p <= P, p not dividing q, p != 1 mod q of (1 - p^-ord)^(1/ord),
/// ord = ord_q(p). q even >= 4, P >= q.
ConstantEstimate euler_ord_product(u64 q, u64 P = kDefaultCutoff);

/// phi(q)/q * prod_{chi != chi_0} L(1, chi), a positive real.
double l_value_product(u64 q);

ConstantEstimate G_q(u64 q, u64 P = kDefaultCutoff);

/// The odd prime power p^r || q with q/p^r | p - 1, if any (there is at most one).
std::optional<arith::PrimePower> hq_prime_power(u64 q);

ConstantEstimate H_q(u64 q, u64 P = kDefaultCutoff);

/// 3/2^(5/2) prod_{p = 3 mod 4} (1 - p^-2)^(1/2).
ConstantEstimate H4_closed(u64 P = kDefaultCutoff);
/// 7/(2^(5/2) 3^(3/4)) prod_{p = 5 mod 6} (1 - p^-2)^(1/2).
ConstantEstimate H6_closed(u64 P = kDefaultCutoff);

struct GB1Result {
    ConstantEstimate estimate;
    /// Imaginary part of sum_chi (sum_b conj chi(b)) log L(1, chi) before it
    /// was discarded.
    double exponent_imaginary = 0.0;
    /// Number of characters whose principal log L(1, chi) was shifted by a
    /// multiple of 2 pi i to follow the Euler-product branch.
    unsigned branch_corrections = 0;
};

/// G_B(1): the positive phi(q)-th root of
/// A_B(1) prod_{p | q} (1 - 1/p)^|B| prod_{chi != chi_0} L(1, chi)^{sum_b conj chi(b)}.
GB1Result G_B1_detailed(const ResidueClassSet& B, u64 P = kDefaultCutoff);
ConstantEstimate G_B1(const ResidueClassSet& B, u64 P = kDefaultCutoff);

/// Leading constant after inserting primes outside B and removing primes of B.
ConstantEstimate ibr_adjust(const ConstantEstimate& c, std::span<const u64> inserted,
                            std::span<const u64> removed);

enum class Statistic { T, E, D, J, NB, LP };

std::string to_string(Statistic s);
Statistic parse_statistic(const std::string& s);

/// Main term C x (log x)^(z - 1) of one counting function.
struct LeadingConstant {
    Statistic statistic;
    ConstantEstimate constant;
    double z = 0.0;  // exponent: count ~ C x (log x)^(z - 1)
    std::string label;
};

/// T -> H_4 + H_6 (z = 1/2); E, D -> H_q; J -> G_q (z = 1/phi(q));
/// NB -> G_B(1)/Gamma(beta) (z = beta); LP -> H_4 (z = 1/2).
LeadingConstant leading_constant(Statistic s, u64 q, const std::optional<ResidueClassSet>& B,
                                 u64 P = kDefaultCutoff);

/// C x (log x)^(z - 1). x < 3 is a DomainError.
double main_term(const LeadingConstant& c, double x);
double main_term(Statistic s, double x, u64 q, const std::optional<ResidueClassSet>& B = std::nullopt,
                 u64 P = kDefaultCutoff);

}  // namespace invlab::constants
