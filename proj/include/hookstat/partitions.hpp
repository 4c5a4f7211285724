#ifndef HOOKSTAT_PARTITIONS_HPP
#define HOOKSTAT_PARTITIONS_HPP

// Integer partitions, hook lengths and standard Young tableau counts.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"

namespace hookstat {

/// A partition of n: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument if the parts are not weakly decreasing
    /// positive integers.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] int first_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// Length of the 1-based row, 0 past the last row.
    [[nodiscard]] int row_length(int row) const noexcept
    {
        return row >= 1 && row <= length() ? parts_[row - 1] : 0;
    }

    [[nodiscard]] std::string str() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A box of a Young diagram, 1-based.
struct Cell {
    int row = 1;
    int col = 1;
    friend bool operator==(const Cell&, const Cell&) = default;
};

[[nodiscard]] inline bool contains(const Partition& lambda, Cell u) noexcept
{
    return u.row >= 1 && u.col >= 1 && u.col <= lambda.row_length(u.row);
}

/// All partitions of n in reverse-lexicographic order; {()} for n = 0.
[[nodiscard]] inline std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0) throw std::domain_error("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Standard successor: split the rightmost part > 1 and refill greedily.
    std::vector<int> a{n};
    while (true) {
        out.emplace_back(a);
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) break;
        const int k = --a.back();
        int rest = ones + 1;
        while (rest > k) {
            a.push_back(k);
            rest -= k;
        }
        if (rest > 0) a.push_back(rest);
    }
    return out;
}

[[nodiscard]] inline Partition conjugate(const Partition& lambda)
{
    std::vector<int> out(static_cast<std::size_t>(lambda.first_part()), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

[[nodiscard]] inline int hook_length(const Partition& lambda, Cell u)
{
    if (!contains(lambda, u))
        throw std::domain_error("hook_length: cell (" + std::to_string(u.row) + "," +
                                std::to_string(u.col) + ") outside " + lambda.str());
    int leg = 0;
    for (int r = u.row + 1; r <= lambda.length() && lambda.row_length(r) >= u.col; ++r) ++leg;
    const int arm = lambda.row_length(u.row) - u.col;
    return arm + leg + 1;
}

/// Hook lengths of every cell, row-major.
[[nodiscard]] inline std::vector<int> hook_lengths(const Partition& lambda)
{
    const Partition conj = conjugate(lambda);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (int row = 1; row <= lambda.length(); ++row)
        for (int col = 1; col <= lambda.row_length(row); ++col)
            out.push_back(lambda.row_length(row) - col + conj.row_length(col) - row + 1);
    return out;
}

/// f_lambda by the hook-length formula. The division is exact; a nonzero
/// remainder means the hooks are wrong and raises std::logic_error.
[[nodiscard]] inline BigInt syt_count(const Partition& lambda)
{
    BigInt denom = 1;
    for (int h : hook_lengths(lambda)) denom *= h;
    const BigInt num = factorial(static_cast<std::uint64_t>(lambda.size()));
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(num, denom, quotient, remainder);
    if (remainder != 0) throw std::logic_error("syt_count: hook product does not divide n!");
    return quotient;
}

/// f_lambda by summing over shapes with one corner removed. Independent of
/// the hook-length formula; the memo lives in the object, so keep one per
/// batch of queries.
class SytOracle {
public:
    [[nodiscard]] BigInt count(const Partition& lambda) { return count(lambda.parts()); }

private:
    BigInt count(const std::vector<int>& parts)
    {
        if (parts.empty()) return 1;
        if (auto it = memo_.find(parts); it != memo_.end()) return it->second;
        BigInt total = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const int below = i + 1 < parts.size() ? parts[i + 1] : 0;
            if (parts[i] == below) continue;
            std::vector<int> smaller = parts;
            if (--smaller[i] == 0) smaller.pop_back();
            total += count(smaller);
        }
        memo_.emplace(parts, total);
        return total;
    }

    std::map<std::vector<int>, BigInt> memo_;
};

[[nodiscard]] inline BigInt syt_count_oracle(const Partition& lambda)
{
    SytOracle oracle;
    return oracle.count(lambda);
}

} // namespace hookstat

#endif
