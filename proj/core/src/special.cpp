#include "invlab/special.hpp"

#include <array>
#include <cmath>
#include <string>

#include "invlab/error.hpp"

namespace invlab::special {

double gamma(double x) {
    if (!(x > 0.0)) throw DomainError("gamma: argument must be positive");
    return std::tgamma(x);
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Gamma(z) for Re z >= 1/2.
std::complex<double> lanczos_gamma(std::complex<double> z) {
    z -= 1.0;
    std::complex<double> sum = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + static_cast<double>(i));
    const std::complex<double> t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

}  // namespace

std::complex<double> rgamma(std::complex<double> z) {
    if (z.imag() == 0.0) {
        const double x = z.real();
        if (x <= 0.0 && x == std::floor(x)) return 0.0;
        if (x > 0.0 && x <= 21.0 && x == std::floor(x)) {
            double factorial = 1.0;
            for (int k = 2; k < static_cast<int>(x); ++k) factorial *= k;
            return 1.0 / factorial;
        }
        if (std::abs(x) < 170.0) return 1.0 / std::tgamma(x);
    }
    if (z.real() < 0.5) {
        // 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi
        return std::sin(kPi * z) * lanczos_gamma(1.0 - z) / kPi;
    }
    return 1.0 / lanczos_gamma(z);
}

double digamma_rational(std::uint64_t r, std::uint64_t m) {
    if (m == 0 || r == 0 || r > m) {
        throw DomainError("digamma_rational: need 1 <= r <= m, got " + std::to_string(r) + "/" +
                          std::to_string(m));
    }
    if (r == m) return -kEulerGamma;
    const double md = static_cast<double>(m);
    double value = -kEulerGamma - std::log(2.0 * md) -
                   0.5 * kPi / std::tan(kPi * static_cast<double>(r) / md);
    double sum = 0.0;
    for (std::uint64_t n = 1; 2 * n < m; ++n) {
        const std::uint64_t nr = (n * r) % m;
        sum += std::cos(2.0 * kPi * static_cast<double>(nr) / md) *
               std::log(std::sin(kPi * static_cast<double>(n) / md));
    }
    return value + 2.0 * sum;
}

}  // namespace invlab::special
