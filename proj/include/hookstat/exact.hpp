#ifndef HOOKSTAT_EXACT_HPP
#define HOOKSTAT_EXACT_HPP

// Exact integer and rational arithmetic shared by every module.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hookstat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(std::uint64_t n)
{
    BigInt out = 1;
    for (std::uint64_t i = 2; i <= n; ++i) out *= i;
    return out;
}

/// C(n, k) by the multiplicative formula; zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

/// Falling factorial n (n-1) ... (n-k+1).
inline BigInt falling_factorial(std::int64_t n, std::int64_t k)
{
    BigInt out = 1;
    for (std::int64_t i = 0; i < k; ++i) out *= BigInt(n - i);
    return out;
}

/// "p/q", or the bare integer when q = 1.
inline std::string to_exact_string(const Rational& x)
{
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline BigInt parse_integer(std::string_view s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw std::invalid_argument("empty integer literal");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("bad integer literal: " + std::string(s));
    return BigInt(std::string(s));
}

/// Inverse of to_exact_string. Accepts unreduced input and normalizes it.
inline Rational parse_rational(std::string_view s)
{
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    const BigInt num = parse_integer(s.substr(0, slash));
    const BigInt den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    return Rational(num, den);
}

/// Exact value of a finite double as a dyadic rational.
inline Rational from_double(double x)
{
    if (x != x || x - x != 0) throw std::domain_error("non-finite double");
    int exponent = 0;
    double mantissa = std::frexp(x, &exponent);
    // 53 bits of mantissa become an integer
    BigInt num = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
    exponent -= 53;
    if (exponent >= 0) return Rational(num << exponent);
    return Rational(num, BigInt(1) << -exponent);
}

} // namespace hookstat

#endif
