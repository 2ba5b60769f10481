#pragma once

#include <complex>
#include <cstdint>

namespace invlab::special {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;
inline constexpr double kPi = 3.14159265358979323846264338;

/// Gamma on the positive reals. Throws DomainError for x <= 0.
double gamma(double x);

/// 1/Gamma(z) for complex z. Exactly zero at z = 0, -1, -2, ...; elsewhere a
/// Lanczos approximation (g = 7) with reflection for Re z < 1/2.
std::complex<double> rgamma(std::complex<double> z);

/// psi(r/m) for 1 <= r <= m by Gauss's digamma theorem: a finite sum of
/// logarithms, a cotangent, and cosine-weighted log-sines.
double digamma_rational(std::uint64_t r, std::uint64_t m);

}  // namespace invlab::special
