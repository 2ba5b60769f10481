#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "invlab/constants.hpp"
#include "invlab/error.hpp"
#include "invlab/selberg_delange.hpp"
#include "invlab/special.hpp"
#include "oracles.hpp"

using namespace invlab;
using namespace invlab::sd;

TEST(Stieltjes, StoredValuesMatchEulerMaclaurinOracle) {
    EXPECT_NEAR(static_cast<double>(kStieltjes[0]), special::kEulerGamma, 1e-16);
    for (unsigned n = 0; n <= kMaxOrder; ++n) {
        const long double ref = oracle::stieltjes(n);
        EXPECT_NEAR(static_cast<double>(kStieltjes[n]), static_cast<double>(ref), 1e-15) << n;
    }
}

TEST(ZetaSeries, Examples) {
    const auto s0 = zeta_shifted_series(0);
    EXPECT_EQ(s0.order(), 0u);
    EXPECT_EQ(s0[0], cplx(1.0));
    const auto s1 = zeta_shifted_series(1);
    EXPECT_NEAR(s1[1].real(), 0.5772156649015329, 1e-16);
    EXPECT_NEAR(s1[1].real(), static_cast<double>(oracle::stieltjes(0)), 1e-15);
    const auto s2 = zeta_shifted_series(2);
    EXPECT_NEAR(s2[2].real(), 0.0728158454836767, 1e-15);
    EXPECT_NEAR(s2[2].real(), -static_cast<double>(oracle::stieltjes(1)), 1e-15);
    EXPECT_THROW(zeta_shifted_series(11), ConfigError);
}

TEST(SeriesPow, Examples) {
    const cplx a(0.3, -0.2);
    const TruncatedPowerSeries base({1.0, a, 0.0});
    const auto z0 = series_pow(zeta_shifted_series(5), 0.0);
    EXPECT_EQ(z0[0], cplx(1.0));
    for (unsigned k = 1; k <= 5; ++k) EXPECT_LT(std::abs(z0[k]), 1e-15);
    const auto sq = series_pow(base, 2.0);
    EXPECT_LT(std::abs(sq[1] - 2.0 * a), 1e-14);
    EXPECT_LT(std::abs(sq[2] - a * a), 1e-14);
    const auto rt = series_pow(base, 0.5);
    EXPECT_LT(std::abs(rt[1] - a / 2.0), 1e-14);
    EXPECT_LT(std::abs(rt[2] + a * a / 8.0), 1e-14);
    EXPECT_THROW(series_pow(TruncatedPowerSeries({2.0, 1.0}), 0.5), DomainError);
}

TEST(SeriesArithmetic, TruncationSemantics) {
    const TruncatedPowerSeries a({1.0, 2.0, 3.0, 4.0});
    const TruncatedPowerSeries b({1.0, -1.0, 0.5, 0.25});
    const auto ab = a * b;
    const auto ab_low = a.truncated(2) * b.truncated(2);
    for (unsigned k = 0; k <= 2; ++k) EXPECT_EQ(ab[k], ab_low[k]);
    const auto one = a * a.reciprocal();
    EXPECT_LT(std::abs(one[0] - 1.0), 1e-15);
    for (unsigned k = 1; k <= 3; ++k) EXPECT_LT(std::abs(one[k]), 1e-13);
    const auto back = a.log().exp();
    for (unsigned k = 0; k <= 3; ++k) EXPECT_LT(std::abs(back[k] - a[k]), 1e-13);
}

TEST(ZCoeffs, Examples) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        cplx z(u(rng), u(rng));
        if (std::abs(z) > 1.0) z /= std::abs(z);
        EXPECT_LT(std::abs(Z_coeffs(z, 6)[0] - 1.0), 1e-15);
    }
    const auto zero = Z_coeffs(0.0, 5);
    for (unsigned j = 0; j <= 5; ++j) EXPECT_LT(std::abs(zero[j] - ((j % 2 == 0) ? 1.0 : -1.0)), 1e-15);
    const auto one = Z_coeffs(1.0, 1);
    EXPECT_NEAR(one[1].real(), special::kEulerGamma - 1.0, 1e-15);
    EXPECT_THROW(Z_coeffs(0.5, 11), ConfigError);
}

TEST(ZCoeffs, AdditiveInZ) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const TruncatedPowerSeries s({1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    for (int i = 0; i < 50; ++i) {
        const cplx z1(u(rng), u(rng)), z2(u(rng), u(rng));
        const auto lhs = TruncatedPowerSeries(Z_coeffs(z1 + z2, 6)) * s;
        const auto rhs = TruncatedPowerSeries(Z_coeffs(z1, 6)) * TruncatedPowerSeries(Z_coeffs(z2, 6)) * s * s;
        for (unsigned k = 0; k <= 6; ++k) ASSERT_LT(std::abs(lhs[k] - rhs[k]), 1e-10);
    }
}

TEST(RGamma, ZerosAndValues) {
    for (int k = 0; k <= 20; ++k) EXPECT_EQ(special::rgamma(cplx(-k, 0.0)), cplx(0.0));
    EXPECT_NEAR(special::rgamma(0.5).real(), 1.0 / std::sqrt(std::numbers::pi), 1e-14);
    EXPECT_NEAR(special::rgamma(5.0).real(), 1.0 / 24.0, 1e-15);
    EXPECT_NEAR(special::rgamma(-0.5).real(), -1.0 / (2.0 * std::sqrt(std::numbers::pi)), 1e-14);
    for (double x = 0.05; x < 8.0; x += 0.173) {
        EXPECT_NEAR(special::rgamma(x).real() * std::tgamma(x), 1.0, 1e-13) << x;
    }
    // Gamma(1 + i) Gamma(1 - i) = pi / sinh(pi)
    const cplx r = special::rgamma(cplx(1.0, 1.0));
    EXPECT_NEAR(std::norm(r), std::sinh(std::numbers::pi) / std::numbers::pi, 1e-13);
}

TEST(LambdaCoeffs, TrivialGroupSum) {
    const std::vector<cplx> g{1.0, 0.0, 0.0, 0.0};
    const auto lam = lambda_coeffs(1.0, g, 3);
    ASSERT_EQ(lam.size(), 4u);
    EXPECT_EQ(lam[0], cplx(1.0));
    for (unsigned k = 1; k <= 3; ++k) EXPECT_EQ(lam[k], cplx(0.0));
    EXPECT_THROW(lambda_coeffs(1.0, std::vector<cplx>{1.0}, 3), DomainError);
}

TEST(LambdaCoeffs, LeadingCoefficientRandomZ) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double z = 1.0 - u(rng);  // (0, 1]
        const double g0 = 0.1 + 2.0 * u(rng);
        const std::vector<cplx> g{g0};
        const auto lam = lambda_coeffs(z, g, 0);
        ASSERT_NEAR(lam[0].real(), g0 / std::tgamma(z), 1e-12 * std::max(1.0, g0 / std::tgamma(z))) << z;
    }
    const std::vector<cplx> g{1.0};
    EXPECT_NEAR(lambda_coeffs(0.5, g, 0)[0].real(), 1.0 / std::sqrt(std::numbers::pi), 1e-14);
}

TEST(LambdaCoeffs, ReproducesGq) {
    const auto B = constants::ResidueClassSet(4, {1});
    const auto gb = constants::G_B1(B, 1'000'000);
    const auto gq = constants::G_q(4, 1'000'000);
    const std::vector<cplx> g{gb.value};
    const auto lam = lambda_coeffs(0.5, g, 0);
    EXPECT_NEAR(lam[0].real(), gq.value, gb.error_bound + gq.error_bound + 1e-12);
}

TEST(MainTerm, Examples) {
    const std::vector<cplx> one{1.0};
    EXPECT_NEAR(sd_main_term(12345.0, 1.0, one, 0), 12345.0, 1e-9);
    const std::vector<cplx> lam{0.7, -0.2, 0.05};
    const double e = std::exp(1.0);
    EXPECT_THROW(sd_main_term(e, 0.5, lam, 2), DomainError);  // e < 3
    const double x = 20.0, L = std::log(x);
    EXPECT_NEAR(sd_main_term(x, 0.5, lam, 2), x / std::sqrt(L) * (0.7 - 0.2 / L + 0.05 / (L * L)), 1e-12);
    EXPECT_THROW(sd_main_term(2.0, 1.0, one, 0), DomainError);

    const auto gq = constants::G_q(4, 1'000'000);
    const std::vector<cplx> lg{gq.value};
    const auto lc = constants::leading_constant(constants::Statistic::J, 4, std::nullopt, 1'000'000);
    EXPECT_NEAR(sd_main_term(1e6, 0.5, lg, 0), constants::main_term(lc, 1e6), 1e-9 * 1e6);
}
