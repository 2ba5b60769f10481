#include "invlab/selberg_delange.hpp"

#include <cmath>
#include <string>

#include "invlab/error.hpp"
#include "invlab/special.hpp"

namespace invlab::sd {

TruncatedPowerSeries::TruncatedPowerSeries(std::vector<cplx> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw DomainError("power series needs at least one coefficient");
}

TruncatedPowerSeries TruncatedPowerSeries::constant(cplx c, unsigned order) {
    std::vector<cplx> v(order + 1, 0.0);
    v[0] = c;
    return TruncatedPowerSeries(std::move(v));
}

TruncatedPowerSeries TruncatedPowerSeries::truncated(unsigned order) const {
    std::vector<cplx> v(order + 1, 0.0);
    for (std::size_t k = 0; k < v.size() && k < c_.size(); ++k) v[k] = c_[k];
    return TruncatedPowerSeries(std::move(v));
}

TruncatedPowerSeries operator+(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
    const unsigned n = std::min(a.order(), b.order());
    std::vector<cplx> v(n + 1);
    for (unsigned k = 0; k <= n; ++k) v[k] = a[k] + b[k];
    return TruncatedPowerSeries(std::move(v));
}

TruncatedPowerSeries operator*(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
    const unsigned n = std::min(a.order(), b.order());
    std::vector<cplx> v(n + 1, 0.0);
    for (unsigned k = 0; k <= n; ++k) {
        for (unsigned j = 0; j <= k; ++j) v[k] += a[j] * b[k - j];
    }
    return TruncatedPowerSeries(std::move(v));
}

TruncatedPowerSeries operator*(cplx s, const TruncatedPowerSeries& a) {
    std::vector<cplx> v = a.coefficients();
    for (auto& c : v) c *= s;
    return TruncatedPowerSeries(std::move(v));
}

TruncatedPowerSeries TruncatedPowerSeries::reciprocal() const {
    if (c_[0] == 0.0) throw DomainError("reciprocal of a series with zero constant term");
    std::vector<cplx> r(c_.size(), 0.0);
    r[0] = 1.0 / c_[0];
    for (std::size_t k = 1; k < c_.size(); ++k) {
        cplx sum = 0.0;
        for (std::size_t j = 1; j <= k; ++j) sum += c_[j] * r[k - j];
        r[k] = -sum * r[0];
    }
    return TruncatedPowerSeries(std::move(r));
}

TruncatedPowerSeries TruncatedPowerSeries::log() const {
    if (c_[0] != 1.0) throw DomainError("series log needs constant term 1");
    std::vector<cplx> b(c_.size(), 0.0);
    for (std::size_t n = 1; n < c_.size(); ++n) {
        cplx sum = 0.0;
        for (std::size_t k = 1; k < n; ++k) sum += static_cast<double>(k) * b[k] * c_[n - k];
        b[n] = c_[n] - sum / static_cast<double>(n);
    }
    return TruncatedPowerSeries(std::move(b));
}

TruncatedPowerSeries TruncatedPowerSeries::exp() const {
    if (c_[0] != 0.0) throw DomainError("series exp needs constant term 0");
    std::vector<cplx> e(c_.size(), 0.0);
    e[0] = 1.0;
    for (std::size_t n = 1; n < c_.size(); ++n) {
        cplx sum = 0.0;
        for (std::size_t k = 1; k <= n; ++k) sum += static_cast<double>(k) * c_[k] * e[n - k];
        e[n] = sum / static_cast<double>(n);
    }
    return TruncatedPowerSeries(std::move(e));
}

TruncatedPowerSeries zeta_shifted_series(unsigned N) {
    if (N > kMaxOrder) {
        throw ConfigError("series order " + std::to_string(N) + " exceeds stored depth " +
                          std::to_string(kMaxOrder));
    }
    std::vector<cplx> c(N + 1, 0.0);
    c[0] = 1.0;
    long double factorial = 1.0L;
    for (unsigned n = 0; n + 1 <= N; ++n) {
        if (n > 0) factorial *= n;
        const long double sign = (n % 2 == 0) ? 1.0L : -1.0L;
        c[n + 1] = static_cast<double>(sign * kStieltjes[n] / factorial);
    }
    return TruncatedPowerSeries(std::move(c));
}

TruncatedPowerSeries series_pow(const TruncatedPowerSeries& base, cplx z) {
    if (base[0] != 1.0) throw DomainError("series_pow needs base(1) = 1");
    auto result = (z * base.log()).exp();
    return result;
}

std::vector<cplx> Z_coeffs(cplx z, unsigned N) {
    const auto zeta_part = series_pow(zeta_shifted_series(N), z);
    // 1/s = 1/(1 + (s - 1)) = sum (-1)^j (s - 1)^j
    std::vector<cplx> inv_s(N + 1);
    for (unsigned j = 0; j <= N; ++j) inv_s[j] = (j % 2 == 0) ? 1.0 : -1.0;
    return (zeta_part * TruncatedPowerSeries(std::move(inv_s))).coefficients();
}

std::vector<cplx> lambda_coeffs(cplx z, std::span<const cplx> G_taylor, unsigned N) {
    if (G_taylor.size() != N + 1) {
        throw DomainError("lambda_coeffs: expected " + std::to_string(N + 1) + " Taylor coefficients of G, got " +
                          std::to_string(G_taylor.size()));
    }
    const auto gamma_over_factorial = Z_coeffs(z, N);
    std::vector<cplx> lambda(N + 1, 0.0);
    for (unsigned k = 0; k <= N; ++k) {
        const cplx rg = special::rgamma(z - static_cast<double>(k));
        if (rg == 0.0) continue;
        cplx sum = 0.0;
        for (unsigned h = 0; h <= k; ++h) sum += G_taylor[h] * gamma_over_factorial[k - h];
        lambda[k] = rg * sum;
    }
    return lambda;
}

cplx sd_main_term_complex(double x, cplx z, std::span<const cplx> lambdas, unsigned N) {
    if (!(x >= 3.0)) throw DomainError("Selberg-Delange main term needs x >= 3");
    if (lambdas.size() < N + 1) throw DomainError("sd_main_term: too few coefficients");
    const double L = std::log(x);
    cplx sum = 0.0;
    double scale = 1.0;
    for (unsigned k = 0; k <= N; ++k) {
        sum += lambdas[k] * scale;
        scale /= L;
    }
    return x * std::pow(cplx(L), z - 1.0) * sum;
}

double sd_main_term(double x, double z, std::span<const cplx> lambdas, unsigned N) {
    return sd_main_term_complex(x, cplx(z), lambdas, N).real();
}

}  // namespace invlab::sd
