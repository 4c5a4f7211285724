#include <gtest/gtest.h>

#include "hookstat/closed_forms.hpp"

using namespace hookstat;

TEST(OkadaRhs, Examples)
{
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(okada_rhs(0, n), n);
    EXPECT_EQ(okada_rhs(1, 2), 3);
    EXPECT_EQ(okada_rhs(2, 3), 40);
    EXPECT_EQ(okada_rhs(3, 2), 0);
}

TEST(Lemma1Value, Examples)
{
    EXPECT_EQ(lemma1_value(1, 2), 3);
    EXPECT_EQ(lemma1_value(0, 1), 1);
    EXPECT_EQ(lemma1_value(2, 4), 160);
    EXPECT_EQ(lemma1_value(2, 4), okada_rhs(2, 4));
    EXPECT_THROW((void)lemma1_value(2, 5), std::domain_error);
    EXPECT_THROW((void)lemma1_value(2, 2), std::domain_error);
}

TEST(Lemma1Value, AgreesWithProductFormula)
{
    for (int r = 0; r <= 6; ++r)
        for (int which : {r + 1, r + 2}) EXPECT_EQ(lemma1_value(r, which), okada_rhs(r, which));
}

TEST(CentralFactorial, RecurrenceValues)
{
    EXPECT_EQ(central_factorial(0, 0), 1);
    EXPECT_EQ(central_factorial(3, 2), 5);
    EXPECT_EQ(central_factorial(4, 2), 21);
    EXPECT_EQ(central_factorial(4, 0), 0);
    EXPECT_EQ(central_factorial(0, 3), 0);
    // T(n, 2) = (4^{n-1} - 1)/3
    for (int n = 2; n <= 12; ++n) EXPECT_EQ(central_factorial(n, 2), ((BigInt(1) << (2 * (n - 1))) - 1) / 3) << n;
    const CentralFactorialTable t(10);
    for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ(t(n, n), 1);
        EXPECT_EQ(t(n, 1), 1);
        for (int k = 1; k <= n; ++k) EXPECT_EQ(t(n, k), BigInt(k) * k * t(n - 1, k) + t(n - 1, k - 1));
    }
    EXPECT_THROW((void)t(11, 1), std::out_of_range);
}

TEST(ExpandPower, Examples)
{
    EXPECT_EQ(expand_power_in_q_basis(0), (std::vector<Rational>{1}));
    EXPECT_EQ(expand_power_in_q_basis(1), (std::vector<Rational>{1, 1}));
    EXPECT_EQ(expand_power_in_q_basis(2), (std::vector<Rational>{1, 5, 1}));
}

TEST(ExpandPower, MatchesCentralFactorialAndReconstructs)
{
    const CentralFactorialTable t(9);
    for (int k = 0; k <= 8; ++k) {
        const auto a = expand_power_in_q_basis(k);
        ASSERT_EQ(a.size(), static_cast<std::size_t>(k) + 1);
        EXPECT_EQ(a.back(), 1);
        RationalPolynomial sum;
        for (int i = 0; i <= k; ++i) {
            EXPECT_EQ(a[static_cast<std::size_t>(i)], Rational(t(k + 1, i + 1))) << k << "," << i;
            sum = sum + q_basis_polynomial(i) * RationalPolynomial({a[static_cast<std::size_t>(i)]});
        }
        std::vector<Rational> monomial(static_cast<std::size_t>(k) + 1, Rational(0));
        monomial.back() = 1;
        EXPECT_EQ(sum, RationalPolynomial(monomial)) << k;
    }
}

TEST(PhiPkClosed, Examples)
{
    EXPECT_EQ(phi_pk_closed(1, 3), 12);
    EXPECT_EQ(phi_pk_closed(2, 2), 17);
    EXPECT_EQ(phi_pk_closed(2, 3), 88);
    for (int n = 0; n <= 10; ++n) {
        EXPECT_EQ(phi_pk_closed(0, n), n);
        EXPECT_EQ(phi_pk_closed(1, n), Rational(n * (3 * n - 1), 2));
    }
}

TEST(PhiPkClosed, MatchesBruteForce)
{
    PhiEvaluator ev;
    for (int k = 0; k <= 4; ++k)
        for (int n = 0; n <= 10; ++n) EXPECT_EQ(phi_pk_closed(k, n), ev.r_poly_value(k, n)) << k << "," << n;
}

TEST(DivisorData, Examples)
{
    auto d = divisor_data(1);
    EXPECT_EQ(d.tau, 1);
    EXPECT_EQ(d.sigma_over_m, 1);
    d = divisor_data(6);
    EXPECT_EQ(d.tau, 4);
    EXPECT_EQ(d.sigma_over_m, 2);
    d = divisor_data(12);
    EXPECT_EQ(d.tau, 6);
    EXPECT_EQ(d.sigma_over_m, Rational(7, 3));
    d = divisor_data(49);
    EXPECT_EQ(d.tau, 3);
    EXPECT_EQ(d.sigma_over_m, Rational(57, 49));
    EXPECT_THROW((void)divisor_data(0), std::domain_error);
}

TEST(DivisorData, SigmaOverMIsSumOfReciprocals)
{
    for (int m = 1; m <= 200; ++m) {
        Rational s = 0;
        int count = 0;
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) {
                s += Rational(1, d);
                ++count;
            }
        const auto data = divisor_data(m);
        EXPECT_EQ(data.tau, count);
        EXPECT_EQ(data.sigma_over_m, s);
    }
}

TEST(PhiEjTauWeighted, PrintedFormulaValues)
{
    // Frozen from tests/oracle/compute_expected.py.
    EXPECT_EQ(phi_ej_tau_weighted(2, 2), 5);
    EXPECT_EQ(phi_ej_tau_weighted(1, 2), 6);
    EXPECT_EQ(phi_ej_tau_weighted(2, 3), 39);
    EXPECT_EQ(phi_ej_tau_weighted(4, 4), 193);
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(phi_ej_tau_weighted(0, n), 1);
    EXPECT_THROW((void)phi_ej_tau_weighted(3, 2), std::domain_error);
}

TEST(PhiEjTauWeighted, DisagreesWithBruteForce)
{
    EXPECT_NE(phi_ej_tau_weighted(2, 2), phi(Elementary{2}, 2));
    EXPECT_EQ(phi(Elementary{2}, 2), 4);
}

TEST(PhiEjCorrected, Examples)
{
    EXPECT_EQ(phi_ej_corrected(2, 2), 4);
    EXPECT_EQ(phi_ej_corrected(1, 2), 5);
    EXPECT_EQ(phi_ej_corrected(0, 0), 1);
    EXPECT_THROW((void)phi_ej_corrected(3, 2), std::domain_error);
}

TEST(PhiEjCorrected, TopDegreeIsFactorialTimesPartitionCount)
{
    for (int n = 0; n <= 15; ++n)
        EXPECT_EQ(phi_ej_corrected(n, n), Rational(factorial(static_cast<std::uint64_t>(n)) *
                                                   static_cast<long long>(enumerate_partitions(n).size())));
}

TEST(PhiEjCorrected, MatchesBruteForce)
{
    PhiEvaluator ev;
    const CompositionWeights w(9);
    for (int n = 0; n <= 9; ++n) {
        const auto brute = ev.table(n).phi_elementary_all();
        for (int j = 0; j <= n; ++j) EXPECT_EQ(phi_ej_corrected(j, n, w), brute[static_cast<std::size_t>(j)]) << j << "," << n;
    }
}
