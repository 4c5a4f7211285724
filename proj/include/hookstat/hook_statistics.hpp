#ifndef HOOKSTAT_HOOK_STATISTICS_HPP
#define HOOKSTAT_HOOK_STATISTICS_HPP

// Symmetric statistics of squared hook lengths and their f_lambda^2-weighted
// averages Phi_n(F) = (1/n!) sum_{lambda |- n} f_lambda^2 F(h_u^2 : u in lambda).
//
// Everything here is exact. Phi_n(F) is a polynomial in n, so this header
// also carries interpolation and finite-difference degree detection.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "exact.hpp"
#include "partitions.hpp"

namespace hookstat {

/// sum_u prod_{i=1}^{r} (h_u^2 - i^2)
struct QProduct {
    int r = 0;
};
/// sum_u h_u^{2k}
struct PowerSum {
    int k = 0;
};
/// e_j on the multiset {h_u^2}
struct Elementary {
    int j = 0;
};
/// prod_i sum_u h_u^{2 mu_i}
struct PowerSumVector {
    Partition mu;
};

using HookStatistic = std::variant<QProduct, PowerSum, Elementary, PowerSumVector>;

[[nodiscard]] inline std::string describe(const HookStatistic& f)
{
    struct {
        std::string operator()(const QProduct& s) const { return "q" + std::to_string(s.r); }
        std::string operator()(const PowerSum& s) const { return "p" + std::to_string(s.k); }
        std::string operator()(const Elementary& s) const { return "e" + std::to_string(s.j); }
        std::string operator()(const PowerSumVector& s) const
        {
            std::string out = "p[";
            for (std::size_t i = 0; i < s.mu.parts().size(); ++i) {
                if (i) out += ",";
                out += std::to_string(s.mu.parts()[i]);
            }
            return out + "]";
        }
    } visitor;
    return std::visit(visitor, f);
}

/// Parses the CLI spelling: q<r>, p<k>, e<j>, p[m1,m2,...].
[[nodiscard]] inline HookStatistic parse_statistic(const std::string& text)
{
    auto parse_nonneg = [&](const std::string& digits) {
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
            digits.size() > 4)
            throw std::invalid_argument("bad statistic: " + text);
        return std::stoi(digits);
    };
    if (text.size() >= 2 && text[0] == 'p' && text[1] == '[') {
        if (text.back() != ']') throw std::invalid_argument("bad statistic: " + text);
        std::vector<int> parts;
        std::string body = text.substr(2, text.size() - 3);
        std::size_t start = 0;
        while (start <= body.size() && !body.empty()) {
            const auto comma = body.find(',', start);
            parts.push_back(parse_nonneg(body.substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return PowerSumVector{Partition(std::move(parts))};
    }
    if (text.size() >= 2) {
        const int value = parse_nonneg(text.substr(1));
        switch (text[0]) {
        case 'q': return QProduct{value};
        case 'p': return PowerSum{value};
        case 'e': return Elementary{value};
        default: break;
        }
    }
    throw std::invalid_argument("bad statistic: " + text);
}

namespace detail {

inline BigInt q_product(const BigInt& x, int r)
{
    BigInt out = 1;
    for (int i = 1; i <= r; ++i) out *= x - BigInt(i) * i;
    return out;
}

inline BigInt power_sum(std::span<const BigInt> squares, int k)
{
    BigInt out = 0;
    for (const auto& x : squares) out += boost::multiprecision::pow(x, static_cast<unsigned>(k));
    return out;
}

/// e_0..e_m of the values, by the usual one-variable-at-a-time update.
inline std::vector<BigInt> elementary_all(std::span<const BigInt> values)
{
    std::vector<BigInt> e(values.size() + 1, BigInt(0));
    e[0] = 1;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * values[i];
    return e;
}

} // namespace detail

/// F evaluated on squared hooks given as a flat list. The value is always an
/// integer; it is returned as a rational to match the Phi value domain.
[[nodiscard]] inline Rational eval_on_squares(const HookStatistic& f, std::span<const BigInt> squares)
{
    struct {
        std::span<const BigInt> sq;
        BigInt operator()(const QProduct& s) const
        {
            if (s.r < 0) throw std::domain_error("QProduct: r must be nonnegative");
            BigInt out = 0;
            for (const auto& x : sq) out += detail::q_product(x, s.r);
            return out;
        }
        BigInt operator()(const PowerSum& s) const
        {
            if (s.k < 0) throw std::domain_error("PowerSum: k must be nonnegative");
            return detail::power_sum(sq, s.k);
        }
        BigInt operator()(const Elementary& s) const
        {
            if (s.j < 0) throw std::domain_error("Elementary: j must be nonnegative");
            if (static_cast<std::size_t>(s.j) > sq.size()) return 0;
            return detail::elementary_all(sq)[static_cast<std::size_t>(s.j)];
        }
        BigInt operator()(const PowerSumVector& s) const
        {
            BigInt out = 1;
            for (int m : s.mu.parts()) out *= detail::power_sum(sq, m);
            return out;
        }
    } visitor{squares};
    return Rational(std::visit(visitor, f));
}

[[nodiscard]] inline std::vector<BigInt> squared_hooks(const Partition& lambda)
{
    std::vector<BigInt> out;
    for (int h : hook_lengths(lambda)) out.emplace_back(BigInt(h) * h);
    return out;
}

[[nodiscard]] inline Rational eval_statistic(const HookStatistic& f, const Partition& lambda)
{
    const auto sq = squared_hooks(lambda);
    return eval_on_squares(f, sq);
}

/// One term of the Phi sum: a partition with its squared hooks and f^2.
struct WeightedPartition {
    Partition shape;
    std::vector<BigInt> squares;
    BigInt syt_squared;
};

/// The weighted partitions of a single n, built once and reused by every
/// statistic evaluated at that n.
class PartitionTable {
public:
    explicit PartitionTable(int n) : n_(checked(n)), n_factorial_(factorial(static_cast<std::uint64_t>(n)))
    {
        for (auto& lambda : enumerate_partitions(n)) {
            BigInt f = syt_count(lambda);
            auto sq = squared_hooks(lambda);
            rows_.push_back({std::move(lambda), std::move(sq), f * f});
        }
    }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const BigInt& n_factorial() const noexcept { return n_factorial_; }
    [[nodiscard]] std::span<const WeightedPartition> rows() const noexcept { return rows_; }

    [[nodiscard]] Rational phi(const HookStatistic& f) const
    {
        Rational total = 0;
        for (const auto& row : rows_) total += Rational(row.syt_squared) * eval_on_squares(f, row.squares);
        return total / Rational(n_factorial_);
    }

    /// Phi_n(e_j) for every j = 0..n in one pass over the partitions.
    [[nodiscard]] std::vector<Rational> phi_elementary_all() const
    {
        std::vector<Rational> out(static_cast<std::size_t>(n_) + 1, Rational(0));
        for (const auto& row : rows_) {
            const auto e = detail::elementary_all(row.squares);
            for (std::size_t j = 0; j < e.size(); ++j) out[j] += Rational(row.syt_squared * e[j]);
        }
        for (auto& v : out) v /= Rational(n_factorial_);
        return out;
    }

private:
    static int checked(int n)
    {
        if (n < 0) throw std::domain_error("phi: n must be nonnegative");
        return n;
    }

    int n_;
    BigInt n_factorial_;
    std::vector<WeightedPartition> rows_;
};

/// Caches one PartitionTable per n. Not thread-safe; give each worker its own.
class PhiEvaluator {
public:
    [[nodiscard]] const PartitionTable& table(int n)
    {
        if (n < 0) throw std::domain_error("phi: n must be nonnegative");
        auto it = tables_.find(n);
        if (it == tables_.end()) it = tables_.emplace(n, PartitionTable(n)).first;
        return it->second;
    }

    [[nodiscard]] Rational phi(const HookStatistic& f, int n) { return table(n).phi(f); }
    [[nodiscard]] Rational okada_lhs(int r, int n) { return phi(QProduct{r}, n); }
    [[nodiscard]] Rational r_poly_value(int k, int n) { return phi(PowerSum{k}, n); }

private:
    std::map<int, PartitionTable> tables_;
};

[[nodiscard]] inline Rational phi(const HookStatistic& f, int n)
{
    return PartitionTable(n).phi(f);
}

/// P_r(n).
[[nodiscard]] inline Rational okada_lhs(int r, int n) { return phi(QProduct{r}, n); }

/// R_k(n).
[[nodiscard]] inline Rational r_poly_value(int k, int n) { return phi(PowerSum{k}, n); }

/// Dense polynomial in one variable with exact coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    [[nodiscard]] Rational coefficient(std::size_t i) const
    {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    [[nodiscard]] Rational operator()(const Rational& x) const
    {
        Rational out = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * x + *it;
        return out;
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b)
    {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return RationalPolynomial(std::move(out));
    }

    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RationalPolynomial(std::move(out));
    }

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    [[nodiscard]] std::string str(char var = 'n') const
    {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += "(" + to_exact_string(coeffs_[i]) + ")";
            if (i > 0) out += std::string("*") + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return out;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree < points.size() through the points, by Newton
/// divided differences. Duplicate abscissae raise std::domain_error.
[[nodiscard]] inline RationalPolynomial interpolate(std::span<const std::pair<std::int64_t, Rational>> points)
{
    if (points.empty()) throw std::domain_error("interpolate: need at least one point");
    const std::size_t m = points.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first)
                throw std::domain_error("interpolate: duplicate abscissa " + std::to_string(points[i].first));

    std::vector<Rational> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - level].first);

    // Horner on the Newton form: p = dd0 + (x-x0)(dd1 + (x-x1)(dd2 + ...)).
    RationalPolynomial out({dd[m - 1]});
    for (std::size_t i = m - 1; i-- > 0;) {
        RationalPolynomial shift({Rational(-points[i].first), Rational(1)});
        out = out * shift + RationalPolynomial({dd[i]});
    }
    return out;
}

/// Degree of the polynomial sampled at consecutive integers, or nullopt when
/// the data cannot settle it. A degree d is reported only when the order d+1
/// differences number at least two and all vanish (so at least d+3 values).
/// An all-zero sequence is reported as inconclusive.
[[nodiscard]] inline std::optional<int> detect_degree(std::span<const Rational> values)
{
    if (values.empty()) throw std::domain_error("detect_degree: empty input");
    std::vector<Rational> row(values.begin(), values.end());
    int highest_nonzero = -1;
    for (int order = 0; !row.empty(); ++order) {
        for (const auto& v : row)
            if (v != 0) {
                highest_nonzero = order;
                break;
            }
        std::vector<Rational> next;
        for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
        row = std::move(next);
    }
    if (highest_nonzero < 0) return std::nullopt;
    const auto following = static_cast<std::int64_t>(values.size()) - highest_nonzero - 1;
    if (following < 2) return std::nullopt;
    return highest_nonzero;
}

} // namespace hookstat

#endif
