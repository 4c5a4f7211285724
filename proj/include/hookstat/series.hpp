#ifndef HOOKSTAT_SERIES_HPP
#define HOOKSTAT_SERIES_HPP

// Truncated bivariate series: a power series in an outer variable (x or y)
// whose coefficients are Laurent polynomials in an inner variable (z or t),
// all with exact rational coefficients. Used to check the Nekrasov-Okounkov
// hook product formula and its Phi_n(e_j) generating function term by term.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "exact.hpp"
#include "hook_statistics.hpp"
#include "partitions.hpp"

namespace hookstat {

/// Laurent polynomial sum_e c_e v^e. Canonical: no zero coefficient at either
/// end; the zero polynomial has no coefficients.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(Rational constant) : LaurentPolynomial(std::vector<Rational>{std::move(constant)}, 0) {}
    LaurentPolynomial(std::vector<Rational> coeffs, int lowest_exponent)
        : coeffs_(std::move(coeffs)), low_(lowest_exponent)
    {
        canonicalize();
    }

    [[nodiscard]] static LaurentPolynomial monomial(Rational c, int exponent)
    {
        return LaurentPolynomial(std::vector<Rational>{std::move(c)}, exponent);
    }

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Exponent range; both are 0 for the zero polynomial.
    [[nodiscard]] int min_exponent() const noexcept { return low_; }
    [[nodiscard]] int max_exponent() const noexcept
    {
        return coeffs_.empty() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1;
    }

    [[nodiscard]] Rational coefficient(int exponent) const
    {
        const int idx = exponent - low_;
        if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(idx)];
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& other)
    {
        if (other.is_zero()) return *this;
        if (is_zero()) return *this = other;
        const int lo = std::min(low_, other.low_);
        const int hi = std::max(max_exponent(), other.max_exponent());
        std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(low_ - lo)] += coeffs_[i];
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
            out[i + static_cast<std::size_t>(other.low_ - lo)] += other.coeffs_[i];
        coeffs_ = std::move(out);
        low_ = lo;
        canonicalize();
        return *this;
    }

    LaurentPolynomial& operator*=(const Rational& c)
    {
        for (auto& x : coeffs_) x *= c;
        canonicalize();
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        LaurentPolynomial neg = b;
        neg *= Rational(-1);
        return a + neg;
    }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return LaurentPolynomial(std::move(out), a.low_ + b.low_);
    }

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    [[nodiscard]] std::string str(char var) const
    {
        if (is_zero()) return "0";
        std::string out;
        for (int e = max_exponent(); e >= low_; --e) {
            const Rational c = coefficient(e);
            if (c == 0) continue;
            if (!out.empty()) out += " + ";
            out += "(" + to_exact_string(c) + ")";
            if (e != 0) out += std::string("*") + var + (e != 1 ? "^" + std::to_string(e) : "");
        }
        return out;
    }

private:
    void canonicalize()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
            low_ += static_cast<int>(lead);
        }
        if (coeffs_.empty()) low_ = 0;
    }

    std::vector<Rational> coeffs_;
    int low_ = 0;
};

/// sum_{n=0}^{order} c_n w^n with Laurent-polynomial coefficients c_n.
/// Products and exp truncate at the same order.
class TruncatedBivariateSeries {
public:
    explicit TruncatedBivariateSeries(int order) : coeffs_(checked_length(order)) {}

    [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    [[nodiscard]] const LaurentPolynomial& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    [[nodiscard]] LaurentPolynomial& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

    friend TruncatedBivariateSeries operator+(const TruncatedBivariateSeries& a, const TruncatedBivariateSeries& b)
    {
        require_same_order(a, b);
        TruncatedBivariateSeries out(a.order());
        for (int n = 0; n <= a.order(); ++n) out[n] = a[n] + b[n];
        return out;
    }

    friend TruncatedBivariateSeries operator*(const TruncatedBivariateSeries& a, const TruncatedBivariateSeries& b)
    {
        require_same_order(a, b);
        TruncatedBivariateSeries out(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    }

    /// Every coefficient multiplied by the same inner polynomial.
    friend TruncatedBivariateSeries operator*(const TruncatedBivariateSeries& a, const LaurentPolynomial& p)
    {
        TruncatedBivariateSeries out(a.order());
        for (int n = 0; n <= a.order(); ++n) out[n] = a[n] * p;
        return out;
    }

    /// exp of a series with zero constant term, from B' = A'B:
    /// n b_n = sum_{m=1}^{n} m a_m b_{n-m}.
    [[nodiscard]] TruncatedBivariateSeries exp() const
    {
        if (!coeffs_.front().is_zero()) throw std::domain_error("exp: series must have zero constant term");
        TruncatedBivariateSeries out(order());
        out[0] = Rational(1);
        for (int n = 1; n <= order(); ++n) {
            LaurentPolynomial acc;
            for (int m = 1; m <= n; ++m) {
                if ((*this)[m].is_zero()) continue;
                acc += (*this)[m] * out[n - m] * Rational(m);
            }
            out[n] = acc * Rational(1, n);
        }
        return out;
    }

    friend bool operator==(const TruncatedBivariateSeries&, const TruncatedBivariateSeries&) = default;

private:
    static std::size_t checked_length(int order)
    {
        if (order < 0) throw std::domain_error("series order must be nonnegative");
        return static_cast<std::size_t>(order) + 1;
    }

    static void require_same_order(const TruncatedBivariateSeries& a, const TruncatedBivariateSeries& b)
    {
        if (a.order() != b.order()) throw std::domain_error("series orders differ");
    }

    std::vector<LaurentPolynomial> coeffs_;
};

/// First coefficient where two series differ, ordered by (outer, inner) degree.
struct SeriesMismatch {
    int outer_degree = 0;
    int inner_degree = 0;
    Rational lhs;
    Rational rhs;
};

struct SeriesComparison {
    bool equal = true;
    std::optional<SeriesMismatch> first_mismatch;
};

[[nodiscard]] inline SeriesComparison series_equal(const TruncatedBivariateSeries& a,
                                                   const TruncatedBivariateSeries& b)
{
    if (a.order() != b.order())
        throw std::domain_error("series_equal: orders " + std::to_string(a.order()) + " and " +
                                std::to_string(b.order()) + " differ");
    for (int n = 0; n <= a.order(); ++n) {
        if (a[n] == b[n]) continue;
        const int lo = std::min(a[n].is_zero() ? b[n].min_exponent() : a[n].min_exponent(),
                                b[n].is_zero() ? a[n].min_exponent() : b[n].min_exponent());
        const int hi = std::max(a[n].max_exponent(), b[n].max_exponent());
        for (int e = lo; e <= hi; ++e) {
            if (a[n].coefficient(e) != b[n].coefficient(e))
                return {false, SeriesMismatch{n, e, a[n].coefficient(e), b[n].coefficient(e)}};
        }
    }
    return {};
}

/// sum_{n <= order} x^n sum_{lambda |- n} prod_u (1 - z/h_u^2), coefficients
/// in z. Each product is (f_lambda^2 / n!^2) prod_u (h_u^2 - z), using
/// prod_u h_u = n!/f_lambda to clear the denominators.
[[nodiscard]] inline TruncatedBivariateSeries no_lhs_direct(int order)
{
    TruncatedBivariateSeries out(order);
    for (int n = 0; n <= order; ++n) {
        const PartitionTable table(n);
        const Rational n_fact_sq = Rational(table.n_factorial() * table.n_factorial());
        LaurentPolynomial sum;
        for (const auto& row : table.rows()) {
            LaurentPolynomial prod(Rational(1));
            for (const auto& sq : row.squares) prod = prod * LaurentPolynomial({Rational(sq), Rational(-1)}, 0);
            sum += prod * (Rational(row.syt_squared) / n_fact_sq);
        }
        out[n] = sum;
    }
    return out;
}

namespace detail {

/// sum_{k>=1} -log(1 - w^k) = sum_{k,i>=1} w^{ki} c_i, truncated, with inner
/// factor v^{ki} attached when inner_power is set. c_i = 1/i is the true
/// logarithm; c_i = 1 drops the 1/i and turns the weight of w^m into tau(m).
inline TruncatedBivariateSeries neg_log_euler_product(int order, bool keep_reciprocal, bool inner_power)
{
    TruncatedBivariateSeries out(order);
    for (int k = 1; k <= order; ++k)
        for (int i = 1; k * i <= order; ++i) {
            const Rational c = keep_reciprocal ? Rational(1, i) : Rational(1);
            out[k * i] += LaurentPolynomial::monomial(c, inner_power ? k * i : 0);
        }
    return out;
}

} // namespace detail

/// prod_{k>=1} (1 - x^k)^{z-1} = exp((1 - z) sum_k -log(1 - x^k)), to order x^order.
[[nodiscard]] inline TruncatedBivariateSeries no_rhs_product(int order)
{
    const auto neg_log = detail::neg_log_euler_product(order, true, false);
    const LaurentPolynomial one_minus_z({Rational(1), Rational(-1)}, 0);
    return (neg_log * one_minus_z).exp();
}

/// sum_n (y^n/n!) sum_j (-1)^{n-j} Phi_n(e_j) t^j with Phi from the partition sum.
[[nodiscard]] inline TruncatedBivariateSeries phi_e_generating_lhs(int order, PhiEvaluator& evaluator)
{
    TruncatedBivariateSeries out(order);
    for (int n = 0; n <= order; ++n) {
        const auto& table = evaluator.table(n);
        const auto values = table.phi_elementary_all();
        std::vector<Rational> coeffs(values.size());
        for (int j = 0; j <= n; ++j) {
            const Rational sign = (n - j) % 2 == 0 ? 1 : -1;
            coeffs[static_cast<std::size_t>(j)] = sign * values[static_cast<std::size_t>(j)] / Rational(table.n_factorial());
        }
        out[n] = LaurentPolynomial(std::move(coeffs), 0);
    }
    return out;
}

[[nodiscard]] inline TruncatedBivariateSeries phi_e_generating_lhs(int order)
{
    PhiEvaluator evaluator;
    return phi_e_generating_lhs(order, evaluator);
}

/// Which expansion of -log(1 - w) feeds the exponential.
enum class LogExpansion {
    corrected,  ///< sum_i w^i / i, weights sigma(m)/m
    as_printed, ///< sum_i w^i, weights tau(m)
};

/// exp((1 - 1/t) sum_m weight(m) (yt)^m), to order y^order. For the corrected
/// expansion each y^n coefficient is checked to be an ordinary polynomial of
/// degree <= n in t; a violation raises std::logic_error.
[[nodiscard]] inline TruncatedBivariateSeries phi_e_generating_rhs(int order, LogExpansion variant)
{
    const auto weighted = detail::neg_log_euler_product(order, variant == LogExpansion::corrected, true);
    const LaurentPolynomial one_minus_inv_t({Rational(-1), Rational(1)}, -1);
    auto out = (weighted * one_minus_inv_t).exp();
    if (variant == LogExpansion::corrected) {
        for (int n = 0; n <= order; ++n) {
            const auto& c = out[n];
            if (!c.is_zero() && (c.min_exponent() < 0 || c.max_exponent() > n))
                throw std::logic_error("phi_e_generating_rhs: y^" + std::to_string(n) +
                                       " coefficient leaves the t-degree window [0, n]");
        }
    }
    return out;
}

/// Phi_n(e_j) read off a generating series: n! (-1)^{n-j} [y^n t^j].
[[nodiscard]] inline Rational phi_ej_from_series(const TruncatedBivariateSeries& series, int j, int n)
{
    const Rational sign = (n - j) % 2 == 0 ? 1 : -1;
    return Rational(factorial(static_cast<std::uint64_t>(n))) * sign * series[n].coefficient(j);
}

} // namespace hookstat

#endif
