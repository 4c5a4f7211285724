#ifndef HOOKSTAT_RSK_HPP
#define HOOKSTAT_RSK_HPP

// Robinson-Schensted correspondence on permutations, longest increasing
// subsequences, exhaustive sums over S_n and a seeded Monte Carlo estimator
// for moments of is(w)/sqrt(n).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"
#include "partitions.hpp"

namespace hookstat {

/// Raised when an exhaustive computation would exceed its size cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A permutation of 1..n in one-line notation.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> one_line) : values_(std::move(one_line))
    {
        std::vector<bool> seen(values_.size() + 1, false);
        for (int v : values_) {
            if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("not a permutation of 1..n");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    [[nodiscard]] static Permutation identity(int n)
    {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    [[nodiscard]] int size() const noexcept { return static_cast<int>(values_.size()); }
    [[nodiscard]] const std::vector<int>& values() const noexcept { return values_; }
    [[nodiscard]] int operator[](std::size_t i) const { return values_[i]; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

/// Rows of a Young tableau, top row first.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

    [[nodiscard]] const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    [[nodiscard]] Partition shape() const
    {
        std::vector<int> parts;
        for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
        return Partition(std::move(parts));
    }

    [[nodiscard]] int size() const noexcept
    {
        int total = 0;
        for (const auto& r : rows_) total += static_cast<int>(r.size());
        return total;
    }

    /// Shape is a partition, rows and columns strictly increase, and the
    /// entries are exactly 1..size().
    [[nodiscard]] bool is_standard() const
    {
        const int n = size();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& row = rows_[i];
            if (row.empty()) return false;
            if (i > 0 && row.size() > rows_[i - 1].size()) return false;
            for (std::size_t j = 0; j < row.size(); ++j) {
                const int v = row[j];
                if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
                seen[static_cast<std::size_t>(v)] = true;
                if (j > 0 && row[j - 1] >= v) return false;
                if (i > 0 && rows_[i - 1][j] >= v) return false;
            }
        }
        return true;
    }

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// (P, Q): insertion and recording tableaux.
struct TableauPair {
    StandardTableau insertion;
    StandardTableau recording;

    [[nodiscard]] Partition shape() const { return insertion.shape(); }
};

namespace detail {

/// Row-inserts x into rows; returns the row index where the new box landed.
inline std::size_t row_insert(std::vector<std::vector<int>>& rows, int x)
{
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            return r;
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return r;
        }
        std::swap(x, *it);
    }
}

} // namespace detail

[[nodiscard]] inline TableauPair rsk(const Permutation& w)
{
    std::vector<std::vector<int>> p, q;
    for (int i = 0; i < w.size(); ++i) {
        const std::size_t r = detail::row_insert(p, w[static_cast<std::size_t>(i)]);
        if (r == q.size()) q.emplace_back();
        q[r].push_back(i + 1);
    }
    return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

/// Shape of rsk(w) without building the recording tableau.
[[nodiscard]] inline Partition rsk_shape(const Permutation& w)
{
    std::vector<std::vector<int>> p;
    for (int v : w.values()) detail::row_insert(p, v);
    std::vector<int> parts;
    for (const auto& row : p) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

/// Inverse of rsk by reverse bumping. Raises std::domain_error unless both
/// tableaux are standard and of equal shape.
[[nodiscard]] inline Permutation rsk_inverse(const TableauPair& pq)
{
    if (!pq.insertion.is_standard() || !pq.recording.is_standard())
        throw std::domain_error("rsk_inverse: tableaux must be standard");
    if (pq.insertion.shape() != pq.recording.shape())
        throw std::domain_error("rsk_inverse: tableaux have different shapes");

    auto p = pq.insertion.rows();
    auto q = pq.recording.rows();
    const int n = pq.insertion.size();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int k = n; k >= 1; --k) {
        // k is the largest recording entry, so it sits at the end of some row
        std::size_t r = 0;
        while (q[r].back() != k) ++r;
        q[r].pop_back();
        int x = p[r].back();
        p[r].pop_back();
        if (q[r].empty()) {
            q.erase(q.begin() + static_cast<std::ptrdiff_t>(r));
            p.erase(p.begin() + static_cast<std::ptrdiff_t>(r));
        }
        while (r-- > 0) {
            // largest entry smaller than x in the row above
            auto it = std::lower_bound(p[r].begin(), p[r].end(), x);
            --it;
            std::swap(x, *it);
        }
        out[static_cast<std::size_t>(k - 1)] = x;
    }
    return Permutation(std::move(out));
}

/// Length of the longest increasing subsequence, by patience sorting.
[[nodiscard]] inline int longest_increasing(std::span<const int> w)
{
    std::vector<int> tops;
    for (int v : w) {
        auto it = std::lower_bound(tops.begin(), tops.end(), v);
        if (it == tops.end())
            tops.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tops.size());
}

[[nodiscard]] inline int longest_increasing(const Permutation& w) { return longest_increasing(w.values()); }

inline constexpr int kDefaultExhaustiveCap = 8;

namespace detail {

inline void check_cap(int n, int cap)
{
    if (n < 1) throw std::domain_error("exhaustive sum needs n >= 1");
    if (n > cap)
        throw ResourceError("exhaustive sum over S_" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

template <typename Visit>
void for_each_permutation(int n, Visit&& visit)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        visit(v);
    } while (std::next_permutation(v.begin(), v.end()));
}

} // namespace detail

/// sum over w in S_n of sum_{u in sh(w)} h_u^{2k}; equals n! R_k(n).
[[nodiscard]] inline BigInt exact_hookpower_sum(int n, int k, int cap = kDefaultExhaustiveCap)
{
    detail::check_cap(n, cap);
    std::map<Partition, BigInt> by_shape;
    BigInt total = 0;
    detail::for_each_permutation(n, [&](const std::vector<int>& v) {
        std::vector<std::vector<int>> p;
        for (int x : v) detail::row_insert(p, x);
        std::vector<int> parts;
        for (const auto& row : p) parts.push_back(static_cast<int>(row.size()));
        Partition shape(std::move(parts));
        auto it = by_shape.find(shape);
        if (it == by_shape.end()) {
            BigInt s = 0;
            for (int h : hook_lengths(shape)) s += boost::multiprecision::pow(BigInt(h), 2 * static_cast<unsigned>(k));
            it = by_shape.emplace(std::move(shape), s).first;
        }
        total += it->second;
    });
    return total;
}

/// sum over w in S_n of is(w)^p.
[[nodiscard]] inline BigInt exact_is_power_sum(int n, int p, int cap = kDefaultExhaustiveCap)
{
    detail::check_cap(n, cap);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    detail::for_each_permutation(n, [&](const std::vector<int>& v) { ++counts[static_cast<std::size_t>(longest_increasing(v))]; });
    BigInt total = 0;
    for (int len = 1; len <= n; ++len)
        total += BigInt(counts[static_cast<std::size_t>(len)]) * boost::multiprecision::pow(BigInt(len), static_cast<unsigned>(p));
    return total;
}

/// #{w in S_n : sh(w) = lambda} for every lambda that occurs.
[[nodiscard]] inline std::map<Partition, std::uint64_t> shape_fiber_counts(int n, int cap = kDefaultExhaustiveCap)
{
    detail::check_cap(n, cap);
    std::map<Partition, std::uint64_t> out;
    detail::for_each_permutation(n, [&](const std::vector<int>& v) { ++out[rsk_shape(Permutation(v))]; });
    return out;
}

/// E[(is(w)/sqrt(n))^p] over uniform w in S_n, computed exhaustively.
[[nodiscard]] inline double exact_is_moment(int n, int p, int cap = kDefaultExhaustiveCap)
{
    const Rational mean(exact_is_power_sum(n, p, cap), factorial(static_cast<std::uint64_t>(n)));
    return static_cast<double>(mean) / std::pow(static_cast<double>(n), p / 2.0);
}

struct MomentEstimate {
    int n = 0;
    int p = 0;
    std::int64_t samples = 0;
    double mean = 0;
    double std_error = 0;
    std::uint64_t seed = 0;
};

/// Sampling uses std::mt19937_64, whose output sequence is fixed by the
/// standard. Samples are split into kMonteCarloStreams fixed streams; stream s
/// is seeded by std::seed_seq{seed_lo, seed_hi, s, version}. Bounded integers
/// come from rejection sampling and permutations from Fisher-Yates, both
/// implemented here so results do not depend on the standard library vendor.
inline constexpr int kMonteCarloStreams = 16;
inline constexpr std::uint32_t kMonteCarloVersion = 1;

namespace detail {

/// Uniform integer in [0, bound) without modulo bias.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline void shuffle(std::vector<int>& v, std::mt19937_64& rng)
{
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

struct StreamSums {
    double sum = 0;
    double sum_sq = 0;
};

inline StreamSums run_moment_stream(int n, int p, std::int64_t count, std::uint64_t seed, int stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), kMonteCarloVersion};
    std::mt19937_64 rng(seq);
    std::vector<int> w(static_cast<std::size_t>(n));
    const double scale = std::sqrt(static_cast<double>(n));
    StreamSums out;
    for (std::int64_t i = 0; i < count; ++i) {
        std::iota(w.begin(), w.end(), 1);
        shuffle(w, rng);
        const double x = std::pow(longest_increasing(w) / scale, p);
        out.sum += x;
        out.sum_sq += x * x;
    }
    return out;
}

} // namespace detail

/// Sample mean and standard error of (is(w)/sqrt(n))^p. Deterministic given
/// the seed, independent of thread scheduling.
[[nodiscard]] inline MomentEstimate monte_carlo_is_moment(int n, int p, std::int64_t samples, std::uint64_t seed,
                                                          bool parallel = true)
{
    if (n < 1) throw std::domain_error("monte_carlo_is_moment: n must be positive");
    if (p < 1) throw std::domain_error("monte_carlo_is_moment: p must be positive");
    if (samples < 1) throw std::domain_error("monte_carlo_is_moment: samples must be positive");

    std::array<std::int64_t, kMonteCarloStreams> counts{};
    for (int s = 0; s < kMonteCarloStreams; ++s)
        counts[static_cast<std::size_t>(s)] = samples / kMonteCarloStreams + (s < samples % kMonteCarloStreams ? 1 : 0);

    std::array<detail::StreamSums, kMonteCarloStreams> sums{};
    if (parallel) {
        std::vector<std::future<detail::StreamSums>> jobs;
        for (int s = 0; s < kMonteCarloStreams; ++s)
            jobs.push_back(std::async(std::launch::async, detail::run_moment_stream, n, p,
                                      counts[static_cast<std::size_t>(s)], seed, s));
        for (int s = 0; s < kMonteCarloStreams; ++s) sums[static_cast<std::size_t>(s)] = jobs[static_cast<std::size_t>(s)].get();
    } else {
        for (int s = 0; s < kMonteCarloStreams; ++s)
            sums[static_cast<std::size_t>(s)] = detail::run_moment_stream(n, p, counts[static_cast<std::size_t>(s)], seed, s);
    }

    // combine in stream order
    double sum = 0, sum_sq = 0;
    for (const auto& s : sums) {
        sum += s.sum;
        sum_sq += s.sum_sq;
    }
    const auto m = static_cast<double>(samples);
    const double mean = sum / m;
    double std_error = 0;
    if (samples > 1) {
        const double variance = std::max(0.0, (sum_sq - m * mean * mean) / (m - 1));
        std_error = std::sqrt(variance / m);
    }
    return {n, p, samples, mean, std_error, seed};
}

} // namespace hookstat

#endif
