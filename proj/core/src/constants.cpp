#include "invlab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numeric>

#include "invlab/dirichlet.hpp"
#include "invlab/error.hpp"
#include "invlab/special.hpp"

namespace invlab::constants {

namespace {

// Relative allowance for floating-point error in the closed-form factors
// (L-values, Gamma, roots), added on top of the truncation bound.
constexpr double kRoundingRel = 1e-13;

// Tail of sum_{p > P} p^-2, bounded by sum_{n > P} n^-2 < 1/(P - 1).
double prime_square_tail(u64 P) { return 1.0 / static_cast<double>(P - 1); }

void require_even_q(u64 q, const char* what) {
    if (q < 4 || q % 2 != 0) {
        throw DomainError(std::string(what) + ": q must be even and >= 4, got " + std::to_string(q));
    }
}

void require_cutoff(u64 q, u64 P) {
    if (P < q || P < 3) {
        throw ConfigError("prime cutoff P = " + std::to_string(P) + " must be >= q = " + std::to_string(q));
    }
}

}  // namespace

ResidueClassSet::ResidueClassSet(u64 q, std::vector<u64> members) : q_(q) {
    if (q < 3) throw DomainError("residue class set needs q >= 3");
    phi_ = arith::euler_phi(q);
    in_set_.assign(q, false);
    for (u64 b : members) {
        const u64 r = b % q;
        if (std::gcd(r, q) != 1) {
            throw DomainError("residue " + std::to_string(b) + " is not coprime to " + std::to_string(q));
        }
        in_set_[r] = true;
    }
    for (u64 r = 0; r < q; ++r) {
        if (in_set_[r]) members_.push_back(r);
    }
    if (members_.empty()) throw DomainError("residue class set must be nonempty");
}

ResidueClassSet ResidueClassSet::complement() const {
    std::vector<u64> rest;
    for (u64 r = 1; r < q_; ++r) {
        if (!in_set_[r] && std::gcd(r, q_) == 1) rest.push_back(r);
    }
    return {q_, std::move(rest)};
}

ResidueClassSet ResidueClassSet::all(u64 q) {
    std::vector<u64> units;
    for (u64 r = 1; r < q; ++r) {
        if (std::gcd(r, q) == 1) units.push_back(r);
    }
    return {q, std::move(units)};
}

std::size_t ResidueClassSet::underline_B() const {
    return std::min<std::size_t>(size(), phi_ - size());
}

double gamma_real(double x) { return special::gamma(x); }

std::span<const std::uint32_t> primes_through(u64 P) {
    static std::mutex mutex;
    // Superseded lists stay alive so earlier spans remain valid.
    static std::vector<std::shared_ptr<const std::vector<std::uint32_t>>> lists;
    static u64 limit = 0;
    std::lock_guard lock(mutex);
    if (lists.empty() || limit < P) {
        limit = std::max<u64>(P, 2 * limit);
        lists.push_back(std::make_shared<const std::vector<std::uint32_t>>(arith::primes_up_to(limit)));
    }
    const auto& primes = *lists.back();
    const auto end = std::upper_bound(primes.begin(), primes.end(), P);
    return {primes.data(), static_cast<std::size_t>(end - primes.begin())};
}

ConstantEstimate euler_ord_product(u64 q, u64 P) {
    require_even_q(q, "euler_ord_product");
    require_cutoff(q, P);
    const u64 phi = arith::euler_phi(q);
    const arith::Factorization phi_factors = arith::factorize(phi);
    std::vector<u64> order(q, 0);
    for (u64 r = 1; r < q; ++r) {
        if (std::gcd(r, q) == 1) order[r] = arith::ord_mod(r, q, phi, phi_factors);
    }
    long double log_sum = 0.0L;
    for (const std::uint32_t p : primes_through(P)) {
        const u64 k = order[p % q];
        if (k <= 1) continue;  // p | q or p = 1 mod q
        const long double t = std::pow(static_cast<long double>(p), -static_cast<long double>(k));
        log_sum += std::log1p(-t) / static_cast<long double>(k);
    }
    const double value = std::exp(static_cast<double>(log_sum));
    // Each omitted factor lies in (exp(-p^-2), 1) since ord >= 2, so the exact
    // product lies in [value * exp(-tail), value].
    const double tail = prime_square_tail(P);
    return {value, value * (-std::expm1(-tail)) + value * kRoundingRel, P};
}

double l_value_product(u64 q) {
    const auto table = dirichlet::character_table(q);
    const dirichlet::LValueEvaluator L(q);
    std::complex<double> log_sum = 0.0;
    for (const auto& chi : table) {
        if (chi.is_principal()) continue;
        log_sum += std::log(L.L1(chi));
    }
    if (std::abs(log_sum.imag()) > 1e-10) {
        throw ConsistencyError("L-value product mod " + std::to_string(q) + " is not real");
    }
    return std::exp(log_sum.real()) * static_cast<double>(arith::euler_phi(q)) / static_cast<double>(q);
}

ConstantEstimate G_q(u64 q, u64 P) {
    require_even_q(q, "G_q");
    const ConstantEstimate euler = euler_ord_product(q, P);
    const double phi = static_cast<double>(arith::euler_phi(q));
    const double prefactor = std::pow(l_value_product(q), 1.0 / phi) / gamma_real(1.0 / phi);
    const double value = prefactor * euler.value;
    return {value, prefactor * euler.error_bound + value * kRoundingRel, P};
}

std::optional<arith::PrimePower> hq_prime_power(u64 q) {
    for (const auto& pp : arith::factorize(q).factors) {
        if (pp.prime == 2) continue;
        const u64 pr = *arith::checked_pow(pp.prime, pp.exponent);
        if ((pp.prime - 1) % (q / pr) == 0) return pp;
    }
    return std::nullopt;
}

ConstantEstimate H_q(u64 q, u64 P) {
    const ConstantEstimate g = G_q(q, P);
    double factor = 1.5;
    if (const auto pp = hq_prime_power(q)) {
        const double pr = static_cast<double>(*arith::checked_pow(pp->prime, pp->exponent));
        factor *= 1.0 + 1.0 / (pr * static_cast<double>(pp->prime - 1));
    }
    return {factor * g.value, factor * g.error_bound, P};
}

namespace {

// prefactor * prod_{p <= P, p = residue mod modulus} (1 - p^-2)^(1/2)
ConstantEstimate closed_form(double prefactor, u64 modulus, u64 residue, u64 P) {
    if (P < 7) throw ConfigError("closed-form constants need P >= 7");
    long double log_sum = 0.0L;
    for (const std::uint32_t p : primes_through(P)) {
        if (p % modulus != residue) continue;
        const long double inv = 1.0L / static_cast<long double>(p);
        log_sum += 0.5L * std::log1p(-inv * inv);
    }
    const double value = prefactor * std::exp(static_cast<double>(log_sum));
    const double tail = prime_square_tail(P);
    return {value, value * (-std::expm1(-tail)) + value * kRoundingRel, P};
}

}  // namespace

ConstantEstimate H4_closed(u64 P) {
    return closed_form(3.0 / std::pow(2.0, 2.5), 4, 3, P);
}

ConstantEstimate H6_closed(u64 P) {
    return closed_form(7.0 / (std::pow(2.0, 2.5) * std::pow(3.0, 0.75)), 6, 5, P);
}

GB1Result G_B1_detailed(const ResidueClassSet& B, u64 P) {
    const u64 q = B.modulus();
    require_cutoff(q, P);
    const double phi = static_cast<double>(B.phi());

    // log A_B(1) / phi(q) = sum_{p !| q} sum_{k >= 2} ([p in B] - [p^k in B]) p^-k / k.
    // weight[r] accumulates 1/(k p^k) over prime powers p^k = r mod q; it
    // drives the branch choice for log L(1, chi).
    long double log_a = 0.0L;
    long double power_tail = 0.0L;
    std::vector<long double> weight(q, 0.0L);
    constexpr long double kNegligible = 1e-22L;
    for (const std::uint32_t p : primes_through(P)) {
        const u64 r1 = p % q;
        if (std::gcd(r1, q) != 1) continue;
        const bool base_in = B.contains(r1);
        const long double inv_p = 1.0L / static_cast<long double>(p);
        weight[r1] += inv_p;
        long double pk_inv = inv_p;
        u64 rk = r1;
        for (unsigned k = 2;; ++k) {
            pk_inv *= inv_p;
            rk = rk * r1 % q;
            const long double term = pk_inv / static_cast<long double>(k);
            weight[rk] += term;
            if (base_in != B.contains(rk)) log_a += base_in ? term : -term;
            if (pk_inv < kNegligible) {
                // sum_{j > k} p^-j / j <= 2 p^-(k+1)
                power_tail += 2.0L * pk_inv * inv_p;
                break;
            }
        }
    }

    long double log_g = log_a;
    for (const auto& pp : arith::factorize(q).factors) {
        log_g += static_cast<long double>(B.size()) / phi *
                 std::log1p(-1.0L / static_cast<long double>(pp.prime));
    }

    GB1Result result;
    const auto table = dirichlet::character_table(q);
    const dirichlet::LValueEvaluator L(q);
    std::complex<double> exponent_sum = 0.0;
    for (const auto& chi : table) {
        if (chi.is_principal()) continue;
        std::complex<double> weight_b = 0.0;
        for (u64 b : B.members()) weight_b += std::conj(chi(b));
        std::complex<double> log_l = std::log(L.L1(chi));
        // The Euler product sum_{p^k <= ...} chi(p^k)/(k p^k) tracks the branch
        // continuous from s = +infinity; move the principal log onto it.
        std::complex<double> euler_estimate = 0.0;
        for (u64 r = 1; r < q; ++r) {
            if (weight[r] != 0.0L) euler_estimate += chi(r) * static_cast<double>(weight[r]);
        }
        const double turns = std::round((euler_estimate.imag() - log_l.imag()) / (2.0 * special::kPi));
        if (turns != 0.0) {
            log_l += std::complex<double>(0.0, 2.0 * special::kPi * turns);
            ++result.branch_corrections;
        }
        exponent_sum += weight_b * log_l;
    }
    result.exponent_imaginary = exponent_sum.imag();
    if (std::abs(result.exponent_imaginary) > 1e-8) {
        throw ConsistencyError("G_B(1): character exponent sum is not real");
    }
    log_g += static_cast<long double>(exponent_sum.real() / phi);

    const double value = std::exp(static_cast<double>(log_g));
    const double log_error = prime_square_tail(P) + static_cast<double>(power_tail) + kRoundingRel;
    result.estimate = {value, value * std::expm1(log_error), P};
    return result;
}

ConstantEstimate G_B1(const ResidueClassSet& B, u64 P) { return G_B1_detailed(B, P).estimate; }

ConstantEstimate ibr_adjust(const ConstantEstimate& c, std::span<const u64> inserted,
                            std::span<const u64> removed) {
    double factor = 1.0;
    for (u64 p : inserted) {
        if (!arith::is_prime(p)) throw DomainError("ibr_adjust: " + std::to_string(p) + " is not prime");
        factor /= 1.0 - 1.0 / static_cast<double>(p);
    }
    for (u64 b : removed) {
        if (!arith::is_prime(b)) throw DomainError("ibr_adjust: " + std::to_string(b) + " is not prime");
        factor *= 1.0 - 1.0 / static_cast<double>(b);
    }
    return {c.value * factor, c.error_bound * factor, c.truncation_P};
}

std::string to_string(Statistic s) {
    switch (s) {
        case Statistic::T: return "T";
        case Statistic::E: return "E";
        case Statistic::D: return "D";
        case Statistic::J: return "J";
        case Statistic::NB: return "NB";
        case Statistic::LP: return "LP";
    }
    return "?";
}

Statistic parse_statistic(const std::string& s) {
    for (Statistic st : {Statistic::T, Statistic::E, Statistic::D, Statistic::J, Statistic::NB, Statistic::LP}) {
        if (to_string(st) == s) return st;
    }
    throw DomainError("unknown statistic '" + s + "'");
}

LeadingConstant leading_constant(Statistic s, u64 q, const std::optional<ResidueClassSet>& B, u64 P) {
    LeadingConstant lc{s, {}, 0.0, {}};
    switch (s) {
        case Statistic::T: {
            const auto h4 = H_q(4, P);
            const auto h6 = H_q(6, P);
            lc.constant = {h4.value + h6.value, h4.error_bound + h6.error_bound, P};
            lc.z = 0.5;
            lc.label = "H4+H6";
            break;
        }
        case Statistic::E:
        case Statistic::D:
            lc.constant = H_q(q, P);
            lc.z = 1.0 / static_cast<double>(arith::euler_phi(q));
            lc.label = "H_" + std::to_string(q);
            break;
        case Statistic::J:
            if (q >= 4 && q % 2 == 0) {
                lc.constant = G_q(q, P);
            } else {
                const double phi = static_cast<double>(arith::euler_phi(q));
                const auto g = G_B1(ResidueClassSet(q, {1}), P);
                const double inv_gamma = 1.0 / gamma_real(1.0 / phi);
                lc.constant = {g.value * inv_gamma, g.error_bound * inv_gamma, P};
            }
            lc.z = 1.0 / static_cast<double>(arith::euler_phi(q));
            lc.label = "G_" + std::to_string(q);
            break;
        case Statistic::NB: {
            if (!B) throw DomainError("NB main term needs a residue class set");
            const auto g = G_B1(*B, P);
            const double inv_gamma = 1.0 / gamma_real(B->beta());
            lc.constant = {g.value * inv_gamma, g.error_bound * inv_gamma, P};
            lc.z = B->beta();
            lc.label = "G_B(1)/Gamma(beta)";
            break;
        }
        case Statistic::LP:
            lc.constant = H_q(4, P);
            lc.z = 0.5;
            lc.label = "H_4";
            break;
    }
    return lc;
}

double main_term(const LeadingConstant& c, double x) {
    if (!(x >= 3.0)) throw DomainError("main term needs x >= 3");
    return c.constant.value * x * std::pow(std::log(x), c.z - 1.0);
}

double main_term(Statistic s, double x, u64 q, const std::optional<ResidueClassSet>& B, u64 P) {
    if (!(x >= 3.0)) throw DomainError("main term needs x >= 3");
    return main_term(leading_constant(s, q, B, P), x);
}

}  // namespace invlab::constants
