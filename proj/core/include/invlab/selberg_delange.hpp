#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace invlab::sd {

using cplx = std::complex<double>;

/// Stieltjes constants gamma_0 .. gamma_10 (25 significant digits).
inline constexpr std::array<long double, 11> kStieltjes = {
    0.5772156649015328606065121L,    -0.07281584548367672486058638L,  -0.009690363192872318484530386L,
    0.002053834420303345866160046L,  0.002325370065467300057468170L,  0.0007933238173010627017533349L,
    -0.0002387693454301996098724218L, -0.0005272895670577510460740975L, -0.0003521233538030395096020522L,
    -0.00003439477441808804817791462L, 0.0002053328149090647946837223L,
};

/// Highest series order supported by the stored constants.
inline constexpr unsigned kMaxOrder = 10;

/// sum_{k <= N} c_k (s - 1)^k. Products and compositions keep order N and a
/// coefficient k of any result depends only on input coefficients <= k.
class TruncatedPowerSeries {
public:
    explicit TruncatedPowerSeries(std::vector<cplx> coefficients);
    static TruncatedPowerSeries constant(cplx c, unsigned order);

    [[nodiscard]] unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
    [[nodiscard]] const std::vector<cplx>& coefficients() const { return c_; }
    [[nodiscard]] cplx operator[](std::size_t k) const { return c_[k]; }

    [[nodiscard]] TruncatedPowerSeries truncated(unsigned order) const;

    friend TruncatedPowerSeries operator+(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);
    friend TruncatedPowerSeries operator*(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);
    friend TruncatedPowerSeries operator*(cplx s, const TruncatedPowerSeries& a);

    /// 1/a; a[0] must be nonzero.
    [[nodiscard]] TruncatedPowerSeries reciprocal() const;
    /// log a; a[0] must equal 1 (the branch with log a(1) = 0).
    [[nodiscard]] TruncatedPowerSeries log() const;
    /// exp a; a[0] must equal 0.
    [[nodiscard]] TruncatedPowerSeries exp() const;

private:
    std::vector<cplx> c_;
};

/// (s - 1) zeta(s) = 1 + sum_{n >= 0} (-1)^n gamma_n / n! (s - 1)^(n + 1).
/// N > kMaxOrder throws ConfigError.
TruncatedPowerSeries zeta_shifted_series(unsigned N);

/// base^z = exp(z log base) with base(1) = 1, so the result is 1 at s = 1.
TruncatedPowerSeries series_pow(const TruncatedPowerSeries& base, cplx z);

/// gamma_j(z)/j! for j = 0..N: Taylor coefficients of ((s - 1) zeta(s))^z / s.
std::vector<cplx> Z_coeffs(cplx z, unsigned N);

/// lambda_k(z) = 1/Gamma(z - k) sum_{h <= k} G_h gamma_{k-h}(z)/(k-h)!, where
/// G_taylor[h] = (d^h G / ds^h)(1; z) / h!. G_taylor must have N + 1 entries.
std::vector<cplx> lambda_coeffs(cplx z, std::span<const cplx> G_taylor, unsigned N);

/// x (log x)^(z-1) sum_{k <= N} lambda_k / (log x)^k. x < 3 throws DomainError.
cplx sd_main_term_complex(double x, cplx z, std::span<const cplx> lambdas, unsigned N);
/// Real part of the above, for real z.
double sd_main_term(double x, double z, std::span<const cplx> lambdas, unsigned N);

}  // namespace invlab::sd
