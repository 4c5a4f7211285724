#include <set>

#include <gtest/gtest.h>

#include "hookstat/hook_statistics.hpp"
#include "hookstat/rsk.hpp"

using namespace hookstat;

namespace {

std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Quadratic LIS, independent of patience sorting.
int lis_quadratic(const std::vector<int>& w)
{
    std::vector<int> best(w.size(), 1);
    int out = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
        out = std::max(out, best[i]);
    }
    return out;
}

} // namespace

TEST(Permutation, Validation)
{
    EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
    EXPECT_NO_THROW(Permutation({2, 1, 3}));
}

TEST(Rsk, Examples)
{
    for (int n = 1; n <= 6; ++n) {
        const auto id = rsk(Permutation::identity(n));
        EXPECT_EQ(id.shape(), Partition({n}));
        EXPECT_EQ(id.insertion, id.recording);
        std::vector<int> rev(static_cast<std::size_t>(n));
        std::iota(rev.rbegin(), rev.rend(), 1);
        EXPECT_EQ(rsk(Permutation(rev)).shape(), Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    }
    const auto pq = rsk(Permutation({2, 1, 3}));
    EXPECT_EQ(pq.shape(), Partition({2, 1}));
    EXPECT_EQ(pq.insertion.rows(), (std::vector<std::vector<int>>{{1, 3}, {2}}));
    EXPECT_EQ(pq.recording.rows(), (std::vector<std::vector<int>>{{1, 3}, {2}}));
}

TEST(RskInverse, Examples)
{
    EXPECT_EQ(rsk_inverse(rsk(Permutation({2, 1, 3}))), Permutation({2, 1, 3}));
    const StandardTableau row(std::vector<std::vector<int>>{{1, 2, 3, 4}});
    EXPECT_EQ(rsk_inverse({row, row}), Permutation::identity(4));
}

TEST(RskInverse, RejectsMalformedTableaux)
{
    const StandardTableau good(std::vector<std::vector<int>>{{1, 3}, {2}});
    const StandardTableau not_increasing(std::vector<std::vector<int>>{{3, 1}, {2}});
    const StandardTableau other_shape(std::vector<std::vector<int>>{{1, 2, 3}});
    const StandardTableau missing(std::vector<std::vector<int>>{{1, 4}, {2}});
    EXPECT_THROW((void)rsk_inverse({good, not_increasing}), std::domain_error);
    EXPECT_THROW((void)rsk_inverse({good, other_shape}), std::domain_error);
    EXPECT_THROW((void)rsk_inverse({missing, good}), std::domain_error);
}

TEST(Rsk, BijectionOnSmallSymmetricGroups)
{
    for (int n = 1; n <= 6; ++n) {
        std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> images;
        for (const auto& w : all_permutations(n)) {
            const auto pq = rsk(w);
            EXPECT_TRUE(pq.insertion.is_standard());
            EXPECT_TRUE(pq.recording.is_standard());
            EXPECT_EQ(pq.insertion.shape(), pq.recording.shape());
            EXPECT_EQ(rsk_inverse(pq), w);
            images.emplace(pq.insertion.rows(), pq.recording.rows());
        }
        EXPECT_EQ(images.size(), all_permutations(n).size());
    }
}

TEST(Rsk, EveryTableauPairIsHit)
{
    // two-sided inverse: rsk(rsk_inverse(P,Q)) = (P,Q) for all same-shape pairs from S_4
    const auto perms = all_permutations(4);
    std::map<Partition, std::vector<StandardTableau>> tableaux;
    for (const auto& w : perms) {
        const auto pq = rsk(w);
        auto& bucket = tableaux[pq.shape()];
        if (std::find(bucket.begin(), bucket.end(), pq.insertion) == bucket.end()) bucket.push_back(pq.insertion);
    }
    for (const auto& [shape, ts] : tableaux) {
        EXPECT_EQ(BigInt(ts.size()), syt_count(shape));
        for (const auto& p : ts)
            for (const auto& q : ts) {
                const auto pq = rsk(rsk_inverse({p, q}));
                EXPECT_EQ(pq.insertion, p);
                EXPECT_EQ(pq.recording, q);
            }
    }
}

TEST(LongestIncreasing, Examples)
{
    EXPECT_EQ(longest_increasing(Permutation::identity(7)), 7);
    EXPECT_EQ(longest_increasing(Permutation({3, 1, 2})), 2);
    EXPECT_EQ(longest_increasing(Permutation({2, 1, 3})), 2);
}

TEST(LongestIncreasing, SchenstedAndQuadraticOracle)
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& w : all_permutations(n)) {
            const int is = longest_increasing(w);
            EXPECT_EQ(is, rsk_shape(w).first_part());
            EXPECT_EQ(is, lis_quadratic(w.values()));
        }
}

TEST(ShapeFibers, CardinalityIsSytSquared)
{
    for (int n = 1; n <= 6; ++n) {
        const auto fibers = shape_fiber_counts(n);
        EXPECT_EQ(fibers.size(), enumerate_partitions(n).size());
        for (const auto& [shape, count] : fibers) {
            const BigInt f = syt_count(shape);
            EXPECT_EQ(BigInt(count), f * f) << shape.str();
        }
    }
}

TEST(ExactHookpowerSum, Examples)
{
    EXPECT_EQ(exact_hookpower_sum(3, 1), 72);
    EXPECT_EQ(exact_hookpower_sum(2, 0), 4);
    EXPECT_EQ(exact_hookpower_sum(4, 1), 528);
    EXPECT_THROW((void)exact_hookpower_sum(9, 1), ResourceError);
    EXPECT_NO_THROW((void)exact_hookpower_sum(9, 0, 9));
}

TEST(ExactHookpowerSum, EqualsFactorialTimesR)
{
    PhiEvaluator ev;
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k <= 2; ++k)
            EXPECT_EQ(Rational(exact_hookpower_sum(n, k)),
                      Rational(factorial(static_cast<std::uint64_t>(n))) * ev.r_poly_value(k, n));
}

TEST(ExactIsPowerSum, FrozenValues)
{
    // tests/oracle/compute_expected.py
    const std::vector<long long> squares{1, 5, 26, 150, 995, 7511, 63707};
    const std::vector<long long> fourth{1, 17, 146, 1194, 10319, 96215, 974099};
    for (int n = 1; n <= 7; ++n) {
        EXPECT_EQ(exact_is_power_sum(n, 2), squares[static_cast<std::size_t>(n - 1)]);
        EXPECT_EQ(exact_is_power_sum(n, 4), fourth[static_cast<std::size_t>(n - 1)]);
    }
    EXPECT_EQ(exact_is_power_sum(4, 1), 58);
}

TEST(BoundSandwich, HoldsExactly)
{
    PhiEvaluator ev;
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k <= 2; ++k) {
            const Rational nf(factorial(static_cast<std::uint64_t>(n)));
            const Rational mean_is = Rational(exact_is_power_sum(n, 2 * k)) / nf;
            const Rational r = ev.r_poly_value(k, n);
            EXPECT_LE(mean_is, r);
            EXPECT_LE(r, Rational(BigInt(1) << (2 * k + 1)) * n * mean_is);
        }
}

TEST(MonteCarlo, DeterministicAcrossSchedules)
{
    const auto a = monte_carlo_is_moment(20, 2, 3000, 11, true);
    const auto b = monte_carlo_is_moment(20, 2, 3000, 11, false);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
    const auto c = monte_carlo_is_moment(20, 2, 3000, 12);
    EXPECT_NE(a.mean, c.mean);
    EXPECT_THROW((void)monte_carlo_is_moment(5, 1, 0, 1), std::domain_error);
}

TEST(MonteCarlo, SmallNAgreesWithExhaustiveMean)
{
    const double exact = exact_is_moment(4, 1);
    EXPECT_DOUBLE_EQ(exact, 29.0 / 24.0);
    const auto est = monte_carlo_is_moment(4, 1, 50000, 1);
    EXPECT_GT(est.std_error, 0);
    EXPECT_LE(std::abs(est.mean - exact), 3 * est.std_error);
}

TEST(MonteCarlo, ShuffleIsUniformOnS3)
{
    std::mt19937_64 rng(5);
    std::map<std::vector<int>, int> counts;
    const int trials = 60000;
    for (int i = 0; i < trials; ++i) {
        std::vector<int> v{1, 2, 3};
        detail::shuffle(v, rng);
        ++counts[v];
    }
    ASSERT_EQ(counts.size(), 6u);
    // chi-square with 5 degrees of freedom; 20.5 is the 0.999 quantile
    double chi2 = 0;
    for (const auto& [_, c] : counts) chi2 += (c - trials / 6.0) * (c - trials / 6.0) / (trials / 6.0);
    EXPECT_LT(chi2, 20.5);
}
