#ifndef HOOKSTAT_CLOSED_FORMS_HPP
#define HOOKSTAT_CLOSED_FORMS_HPP

// Closed-form right-hand sides: the Okada product formula, its special
// values, central factorial numbers and the resulting Phi_n(p_k) formula,
// divisor functions, and two closed forms for Phi_n(e_j).
//
// phi_ej_tau_weighted() is the published formula with tau(m) weights; it
// disagrees with brute force from n = 2 on. phi_ej_corrected() uses
// sigma(m)/m, which is what the expansion of -log(1 - w) actually produces,
// and matches brute force.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"
#include "hook_statistics.hpp"

namespace hookstat {

/// (1/(2(r+1)^2)) C(2r,r) C(2r+2,r+1), the leading coefficient of P_r(n).
[[nodiscard]] inline Rational okada_constant(int r)
{
    if (r < 0) throw std::domain_error("okada_constant: r must be nonnegative");
    const BigInt rp1 = r + 1;
    return Rational(binomial(2 * r, r) * binomial(2 * r + 2, r + 1), 2 * rp1 * rp1);
}

/// Okada's product formula for P_r(n).
[[nodiscard]] inline Rational okada_rhs(int r, std::int64_t n)
{
    BigInt prod = 1;
    for (std::int64_t j = 0; j <= r; ++j) prod *= BigInt(n - j);
    return okada_constant(r) * Rational(prod);
}

/// P_r(which) for which in {r+1, r+2}, as the constant times which!.
[[nodiscard]] inline Rational lemma1_value(int r, int which)
{
    if (which != r + 1 && which != r + 2)
        throw std::domain_error("lemma1_value: which must be r+1 or r+2, got " + std::to_string(which));
    return okada_constant(r) * Rational(factorial(static_cast<std::uint64_t>(which)));
}

/// Central factorial numbers T(n,k) = k^2 T(n-1,k) + T(n-1,k-1), T(0,0) = 1,
/// for all n, k <= max_n. Immutable once built.
class CentralFactorialTable {
public:
    explicit CentralFactorialTable(int max_n)
        : max_n_(max_n)
    {
        if (max_n < 0) throw std::domain_error("CentralFactorialTable: max_n must be nonnegative");
        const auto len = static_cast<std::size_t>(max_n) + 1;
        rows_.assign(len, std::vector<BigInt>(len, BigInt(0)));
        rows_[0][0] = 1;
        for (int n = 1; n <= max_n; ++n)
            for (int k = 1; k <= n; ++k)
                rows_[n][k] = BigInt(k) * k * rows_[n - 1][k] + rows_[n - 1][k - 1];
    }

    [[nodiscard]] int max_n() const noexcept { return max_n_; }

    [[nodiscard]] const BigInt& operator()(int n, int k) const
    {
        if (n < 0 || k < 0 || n > max_n_ || k > max_n_)
            throw std::out_of_range("CentralFactorialTable: index outside table");
        return rows_[n][k];
    }

private:
    int max_n_;
    std::vector<std::vector<BigInt>> rows_;
};

[[nodiscard]] inline BigInt central_factorial(int n, int k)
{
    if (n < 0 || k < 0) throw std::domain_error("central_factorial: negative index");
    if (k > n) return 0;
    return CentralFactorialTable(n)(n, k);
}

/// q_i(x) = prod_{j=1}^{i} (x - j^2) as a coefficient list, q_0 = 1.
[[nodiscard]] inline RationalPolynomial q_basis_polynomial(int i)
{
    RationalPolynomial out({Rational(1)});
    for (int j = 1; j <= i; ++j) out = out * RationalPolynomial({Rational(-j * j), Rational(1)});
    return out;
}

/// A(k,0..k) with x^k = sum_i A(k,i) q_i(x), by dividing out the monic q_i
/// from the top degree down.
[[nodiscard]] inline std::vector<Rational> expand_power_in_q_basis(int k)
{
    if (k < 0) throw std::domain_error("expand_power_in_q_basis: k must be nonnegative");
    std::vector<Rational> remainder(static_cast<std::size_t>(k) + 1, Rational(0));
    remainder[static_cast<std::size_t>(k)] = 1;
    std::vector<Rational> out(static_cast<std::size_t>(k) + 1, Rational(0));
    for (int i = k; i >= 0; --i) {
        const Rational a = remainder[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] = a;
        if (a == 0) continue;
        const auto q = q_basis_polynomial(i).coefficients();
        for (std::size_t d = 0; d < q.size(); ++d) remainder[d] -= a * q[d];
    }
    return out;
}

/// Phi_n(p_k) = sum_i T(k+1,i+1) * okada_rhs(i, n).
[[nodiscard]] inline Rational phi_pk_closed(int k, std::int64_t n)
{
    if (k < 0) throw std::domain_error("phi_pk_closed: k must be nonnegative");
    const CentralFactorialTable table(k + 1);
    Rational total = 0;
    for (int i = 0; i <= k; ++i) {
        // C(n, i+1) (i+1)! is the falling factorial, i.e. okada_rhs up to the constant
        const Rational term = okada_constant(i) * Rational(factorial(static_cast<std::uint64_t>(i) + 1)) *
                              Rational(binomial(n, i + 1));
        total += Rational(table(k + 1, i + 1)) * term;
    }
    return total;
}

struct DivisorData {
    std::int64_t m = 1;
    std::int64_t tau = 1;
    Rational sigma_over_m = 1;
};

[[nodiscard]] inline DivisorData divisor_data(std::int64_t m)
{
    if (m < 1) throw std::domain_error("divisor_data: m must be positive");
    DivisorData out{m, 0, Rational(0)};
    std::int64_t sigma = 0;
    for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        ++out.tau;
        sigma += d;
        if (d * d != m) {
            ++out.tau;
            sigma += m / d;
        }
    }
    out.sigma_over_m = Rational(sigma, m);
    return out;
}

namespace detail {

/// Sum over ordered compositions b_1 + ... + b_parts = total (b_i >= 1) of
/// prod tau(b_i + 1).
inline BigInt tau_composition_sum(int total, int parts)
{
    if (parts == 0) return total == 0 ? 1 : 0;
    BigInt out = 0;
    for (int first = 1; first <= total - (parts - 1); ++first)
        out += BigInt(divisor_data(first + 1).tau) * tau_composition_sum(total - first, parts - 1);
    return out;
}

} // namespace detail

/// The published Phi_n(e_j) formula with tau weights, evaluated verbatim:
/// C(n,j) sum_q j!/(j-q)! sum_p C(n-q,p) sum_{b |= q, p parts} prod tau(b_i+1).
[[nodiscard]] inline Rational phi_ej_tau_weighted(int j, int n)
{
    if (j < 0 || n < 0) throw std::domain_error("phi_ej_tau_weighted: negative argument");
    if (j > n) throw std::domain_error("phi_ej_tau_weighted: j must not exceed n");
    BigInt outer = 0;
    for (int q = 0; q <= j; ++q) {
        BigInt inner = 0;
        for (int p = 0; p <= q; ++p) inner += binomial(n - q, p) * detail::tau_composition_sum(q, p);
        outer += falling_factorial(j, q) * inner;
    }
    return Rational(binomial(n, j) * outer);
}

/// W(u, m) = [y^m] (sum_{i>=1} (sigma(i)/i) y^i)^u for m <= order, u <= order,
/// built by repeated truncated convolution.
class CompositionWeights {
public:
    explicit CompositionWeights(int order) : order_(order)
    {
        if (order < 0) throw std::domain_error("CompositionWeights: order must be nonnegative");
        const auto len = static_cast<std::size_t>(order) + 1;
        std::vector<Rational> base(len, Rational(0));
        for (int i = 1; i <= order; ++i) base[static_cast<std::size_t>(i)] = divisor_data(i).sigma_over_m;
        std::vector<Rational> power(len, Rational(0));
        power[0] = 1;
        powers_.push_back(power);
        for (int u = 1; u <= order; ++u) {
            std::vector<Rational> next(len, Rational(0));
            for (std::size_t a = 0; a < len; ++a) {
                if (power[a] == 0) continue;
                for (std::size_t b = 1; a + b < len; ++b) next[a + b] += power[a] * base[b];
            }
            power = std::move(next);
            powers_.push_back(power);
        }
    }

    [[nodiscard]] const Rational& operator()(int u, int m) const
    {
        if (u < 0 || m < 0 || u > order_ || m > order_)
            throw std::out_of_range("CompositionWeights: index outside table");
        return powers_[static_cast<std::size_t>(u)][static_cast<std::size_t>(m)];
    }

private:
    int order_;
    std::vector<std::vector<Rational>> powers_;
};

/// Phi_n(e_j) = n! sum_{u=n-j}^{n} C(u, n-j) W(u, n) / u!.
[[nodiscard]] inline Rational phi_ej_corrected(int j, int n, const CompositionWeights& weights)
{
    if (j < 0 || n < 0) throw std::domain_error("phi_ej_corrected: negative argument");
    if (j > n) throw std::domain_error("phi_ej_corrected: j must not exceed n");
    Rational total = 0;
    for (int u = n - j; u <= n; ++u)
        total += Rational(binomial(u, n - j)) * weights(u, n) / Rational(factorial(static_cast<std::uint64_t>(u)));
    return Rational(factorial(static_cast<std::uint64_t>(n))) * total;
}

[[nodiscard]] inline Rational phi_ej_corrected(int j, int n)
{
    if (n < 0) throw std::domain_error("phi_ej_corrected: negative argument");
    return phi_ej_corrected(j, n, CompositionWeights(n));
}

} // namespace hookstat

#endif
