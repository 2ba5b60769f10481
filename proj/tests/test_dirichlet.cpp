#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "invlab/arith.hpp"
#include "invlab/dirichlet.hpp"
#include "invlab/error.hpp"
#include "invlab/special.hpp"
#include "oracles.hpp"

using namespace invlab;
using namespace invlab::dirichlet;
using cd = std::complex<double>;

namespace {

const DirichletCharacter& nonprincipal(const std::vector<DirichletCharacter>& table) {
    for (const auto& chi : table) {
        if (!chi.is_principal()) return chi;
    }
    throw std::logic_error("no nonprincipal character");
}

}  // namespace

TEST(UnitGroupBasis, Structure) {
    for (u64 q = 3; q <= 300; ++q) {
        const UnitGroupBasis basis(q);
        u64 prod = 1;
        for (const auto& g : basis.generators()) {
            prod *= g.order;
            ASSERT_EQ(arith::powmod(g.residue, g.order, q), 1u);
            ASSERT_EQ(oracle::brute_order(g.residue, q), g.order);
        }
        ASSERT_EQ(prod, arith::euler_phi(q));
        for (u64 a = 1; a < q; ++a) {
            if (!basis.is_unit(a)) continue;
            const auto e = basis.dlog(a);
            u64 v = 1;
            for (std::size_t i = 0; i < e.size(); ++i) {
                v = v * arith::powmod(basis.generators()[i].residue, e[i], q) % q;
            }
            ASSERT_EQ(v, a) << a << " mod " << q;
        }
    }
    EXPECT_THROW(UnitGroupBasis(2), DomainError);
}

TEST(CharacterTable, Mod4And6) {
    const auto t4 = character_table(4);
    ASSERT_EQ(t4.size(), 2u);
    EXPECT_TRUE(t4.front().is_principal());
    EXPECT_EQ(nonprincipal(t4)(3), cd(-1.0));
    EXPECT_EQ(nonprincipal(t4)(1), cd(1.0));
    EXPECT_EQ(nonprincipal(t4)(2), cd(0.0));

    const auto t6 = character_table(6);
    ASSERT_EQ(t6.size(), 2u);
    EXPECT_EQ(nonprincipal(t6)(5), cd(-1.0));
}

TEST(CharacterTable, Mod5FourthRoots) {
    const auto t5 = character_table(5);
    ASSERT_EQ(t5.size(), 4u);
    std::vector<cd> at2;
    for (const auto& chi : t5) {
        const Rotation r = chi.rotation(2);
        EXPECT_EQ(4 % r.denominator, 0u);
        at2.push_back(chi(2));
    }
    for (cd v : at2) EXPECT_NEAR(std::abs(std::pow(v, 4) - 1.0), 0.0, 1e-12);
    // 2 generates (Z/5)^x, so the four values are distinct
    for (std::size_t i = 0; i < at2.size(); ++i) {
        for (std::size_t j = i + 1; j < at2.size(); ++j) EXPECT_GT(std::abs(at2[i] - at2[j]), 0.5);
    }
}

TEST(CharacterTable, DistinctClosedUnderConjugation) {
    for (u64 q = 3; q <= 60; ++q) {
        const auto table = character_table(q);
        ASSERT_EQ(table.size(), arith::euler_phi(q));
        int principal = 0;
        for (std::size_t i = 0; i < table.size(); ++i) {
            principal += table[i].is_principal();
            for (std::size_t j = i + 1; j < table.size(); ++j) ASSERT_FALSE(table[i] == table[j]);
            const auto c = table[i].conj();
            ASSERT_TRUE(std::find(table.begin(), table.end(), c) != table.end());
        }
        ASSERT_EQ(principal, 1);
    }
}

TEST(Characters, Multiplicative) {
    for (u64 q : {7u, 12u, 15u, 16u, 24u, 35u}) {
        for (const auto& chi : character_table(q)) {
            for (u64 a = 1; a < q; ++a) {
                for (u64 b = 1; b < q; ++b) {
                    if (std::gcd(a, q) != 1 || std::gcd(b, q) != 1) continue;
                    ASSERT_LT(std::abs(chi(a * b % q) - chi(a) * chi(b)), 1e-12);
                }
            }
        }
    }
}

TEST(Characters, RowOrthogonality) {
    for (u64 q = 3; q <= 100; ++q) {
        for (const auto& chi : character_table(q)) {
            cd sum = 0.0;
            for (u64 a = 0; a < q; ++a) sum += chi(a);
            if (chi.is_principal()) {
                ASSERT_NEAR(sum.real(), static_cast<double>(arith::euler_phi(q)), 1e-9);
            } else {
                ASSERT_LT(std::abs(sum), 1e-10) << q;
            }
        }
    }
}

TEST(Characters, ColumnOrthogonality) {
    for (u64 q = 3; q <= 100; ++q) {
        const auto table = character_table(q);
        for (u64 a = 2; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            cd sum = 0.0;
            for (const auto& chi : table) sum += chi(a);
            ASSERT_LT(std::abs(sum), 1e-10) << a << " mod " << q;
        }
    }
}

TEST(Digamma, GaussFormulaMatchesSeriesOracle) {
    for (u64 m = 2; m <= 40; ++m) {
        for (u64 r = 1; r <= m; ++r) {
            const long double x = static_cast<long double>(r) / m;
            ASSERT_NEAR(special::digamma_rational(r, m), static_cast<double>(oracle::digamma(x)), 1e-12)
                << r << "/" << m;
        }
    }
}

TEST(L1, ClosedForms) {
    const double pi = std::numbers::pi;
    const auto l4 = L1(nonprincipal(character_table(4)));
    EXPECT_NEAR(l4.real(), pi / 4, 1e-13);
    EXPECT_NEAR(l4.imag(), 0.0, 1e-13);
    const auto l6 = L1(nonprincipal(character_table(6)));
    EXPECT_NEAR(l6.real(), pi / (2 * std::sqrt(3.0)), 1e-13);
    EXPECT_THROW(L1(character_table(5).front()), DomainError);
}

TEST(L1, Conjugation) {
    const LValueEvaluator eval(12);
    for (const auto& chi : character_table(12)) {
        if (chi.is_principal()) continue;
        EXPECT_LT(std::abs(eval.L1(chi.conj()) - std::conj(eval.L1(chi))), 1e-13);
    }
    const LValueEvaluator eval13(13);
    for (const auto& chi : character_table(13)) {
        if (chi.is_principal()) continue;
        EXPECT_LT(std::abs(eval13.L1(chi.conj()) - std::conj(eval13.L1(chi))), 1e-13);
    }
}

TEST(L1, AgreesWithPartialSums) {
    constexpr u64 kN = 10'000'000;
    std::vector<std::vector<long double>> residue_sums(31);
    for (u64 q = 3; q <= 30; ++q) residue_sums[q].assign(q, 0.0L);
    for (u64 n = kN; n >= 1; --n) {
        const long double inv = 1.0L / static_cast<long double>(n);
        for (u64 q = 3; q <= 30; ++q) residue_sums[q][n % q] += inv;
    }
    for (u64 q = 3; q <= 30; ++q) {
        const LValueEvaluator eval(q);
        const double tol = 2.0 * static_cast<double>(q) / static_cast<double>(kN) + 1e-8;
        for (const auto& chi : character_table(q)) {
            if (chi.is_principal()) continue;
            std::complex<long double> partial = 0.0L;
            for (u64 a = 1; a < q; ++a) {
                const cd v = chi(a);
                partial += std::complex<long double>(v.real(), v.imag()) * residue_sums[q][a];
            }
            const cd got = eval.L1(chi);
            ASSERT_NEAR(got.real(), static_cast<double>(partial.real()), tol) << q;
            ASSERT_NEAR(got.imag(), static_cast<double>(partial.imag()), tol) << q;
        }
    }
}

TEST(L1, BoundedByLogQ) {
    double worst = 0.0;
    for (u64 q = 3; q <= 200; ++q) {
        const LValueEvaluator eval(q);
        for (const auto& chi : character_table(q)) {
            if (chi.is_principal()) continue;
            worst = std::max(worst, std::abs(eval.L1(chi)) / std::log(static_cast<double>(q)));
        }
    }
    EXPECT_LT(worst, 3.0);
    EXPECT_GT(worst, 0.0);
}
