#ifndef HOOKSTAT_VERIFY_HPP
#define HOOKSTAT_VERIFY_HPP

// Verification suites behind the command-line front end. Each suite returns
// CheckReports in a deterministic order; serialization is JSON lines.

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "closed_forms.hpp"
#include "exact.hpp"
#include "hook_statistics.hpp"
#include "rsk.hpp"
#include "series.hpp"

namespace hookstat {

enum class CheckStatus { pass, fail, erratum_confirmed, inconclusive };

[[nodiscard]] inline const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::erratum_confirmed: return "erratum-confirmed";
    case CheckStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

struct CheckReport {
    std::string check_name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    CheckStatus status = CheckStatus::inconclusive;
    std::optional<std::string> lhs; ///< exact "p/q"
    std::optional<std::string> rhs; ///< exact "p/q"
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    std::int64_t elapsed_ms = 0;
};

/// One JSON object per report. Timing is written as 0 unless requested so
/// that repeated runs are byte-identical.
[[nodiscard]] inline std::string to_json_line(const CheckReport& r, bool include_timing = false)
{
    nlohmann::ordered_json j;
    j["check_name"] = r.check_name;
    j["params"] = r.params;
    j["status"] = to_string(r.status);
    if (r.lhs) j["lhs"] = *r.lhs;
    if (r.rhs) j["rhs"] = *r.rhs;
    if (!r.details.empty()) j["details"] = r.details;
    j["elapsed_ms"] = include_timing ? r.elapsed_ms : 0;
    return j.dump();
}

[[nodiscard]] inline bool any_failed(const std::vector<CheckReport>& reports)
{
    for (const auto& r : reports)
        if (r.status == CheckStatus::fail) return true;
    return false;
}

namespace detail {

class Stopwatch {
public:
    [[nodiscard]] std::int64_t ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline CheckReport equality_report(std::string name, nlohmann::ordered_json params, const Rational& lhs,
                                   const Rational& rhs, std::int64_t elapsed)
{
    CheckReport r;
    r.check_name = std::move(name);
    r.params = std::move(params);
    r.status = lhs == rhs ? CheckStatus::pass : CheckStatus::fail;
    r.lhs = to_exact_string(lhs);
    r.rhs = to_exact_string(rhs);
    r.elapsed_ms = elapsed;
    return r;
}

} // namespace detail

inline constexpr int kOkadaMaxN = 20;
inline constexpr int kOkadaMaxR = 8;

/// P_r(n) against the product formula for n = 1..max_n, r = 0..max_r, in
/// (n, r) order. Parameters beyond the default caps are not computed; a
/// single inconclusive report marks the skipped range.
[[nodiscard]] inline std::vector<CheckReport> verify_okada(int max_n, int max_r, PhiEvaluator& evaluator,
                                                           int n_cap = kOkadaMaxN, int r_cap = kOkadaMaxR)
{
    std::vector<CheckReport> out;
    const int n_hi = std::min(max_n, n_cap);
    const int r_hi = std::min(max_r, r_cap);
    for (int n = 1; n <= n_hi; ++n)
        for (int r = 0; r <= r_hi; ++r) {
            detail::Stopwatch sw;
            const Rational lhs = evaluator.okada_lhs(r, n);
            const Rational rhs = okada_rhs(r, n);
            out.push_back(detail::equality_report("okada", {{"n", n}, {"r", r}}, lhs, rhs, sw.ms()));
        }
    if (n_hi < max_n || r_hi < max_r) {
        CheckReport skipped;
        skipped.check_name = "okada";
        skipped.params = {{"max_n", max_n}, {"max_r", max_r}};
        skipped.status = CheckStatus::inconclusive;
        skipped.details = {{"reason", "partial run: grid capped at n <= " + std::to_string(n_cap) +
                                          ", r <= " + std::to_string(r_cap)}};
        out.push_back(std::move(skipped));
    }
    return out;
}

/// Partition-sum side of the hook product formula against the Euler product.
[[nodiscard]] inline CheckReport verify_hook_product(int order)
{
    detail::Stopwatch sw;
    const auto cmp = series_equal(no_lhs_direct(order), no_rhs_product(order));
    CheckReport r;
    r.check_name = "hook-product-formula";
    r.params = {{"order", order}};
    r.status = cmp.equal ? CheckStatus::pass : CheckStatus::fail;
    if (cmp.first_mismatch) {
        r.lhs = to_exact_string(cmp.first_mismatch->lhs);
        r.rhs = to_exact_string(cmp.first_mismatch->rhs);
        r.details = {{"x_degree", cmp.first_mismatch->outer_degree}, {"z_degree", cmp.first_mismatch->inner_degree}};
    }
    r.elapsed_ms = sw.ms();
    return r;
}

[[nodiscard]] inline const char* to_string(LogExpansion v)
{
    return v == LogExpansion::corrected ? "corrected" : "as_printed";
}

/// Generating function of Phi_n(e_j) from brute force against the
/// exponential expansion. A mismatch of the as_printed expansion is the
/// expected outcome and is reported as erratum-confirmed.
[[nodiscard]] inline CheckReport verify_series(int order, LogExpansion variant, PhiEvaluator& evaluator)
{
    detail::Stopwatch sw;
    const auto lhs = phi_e_generating_lhs(order, evaluator);
    const auto rhs = phi_e_generating_rhs(order, variant);
    const auto cmp = series_equal(lhs, rhs);
    CheckReport r;
    r.check_name = "phi-e-generating-function";
    r.params = {{"order", order}, {"variant", to_string(variant)}};
    if (cmp.equal) {
        r.status = CheckStatus::pass;
    } else {
        const auto& m = *cmp.first_mismatch;
        r.status = variant == LogExpansion::as_printed ? CheckStatus::erratum_confirmed : CheckStatus::fail;
        r.lhs = to_exact_string(m.lhs);
        r.rhs = to_exact_string(m.rhs);
        const int n = m.outer_degree;
        const int j = m.inner_degree;
        r.details = {{"y_degree", n}, {"t_degree", j}};
        if (j >= 0 && j <= n) {
            r.details["phi_e_brute_force"] = to_exact_string(phi_ej_from_series(lhs, j, n));
            r.details["phi_e_expansion"] = to_exact_string(phi_ej_from_series(rhs, j, n));
        }
        r.details["phi_e_top_brute_force"] = to_exact_string(phi_ej_from_series(lhs, n, n));
        r.details["phi_e_top_expansion"] = to_exact_string(phi_ej_from_series(rhs, n, n));
    }
    r.elapsed_ms = sw.ms();
    return r;
}

/// What the degree of Phi_n(F) should be, when known.
struct DegreeExpectation {
    enum class Relation { none, equal, at_most } relation = Relation::none;
    int value = 0;
};

[[nodiscard]] inline DegreeExpectation expected_degree(const HookStatistic& f)
{
    using R = DegreeExpectation::Relation;
    if (const auto* p = std::get_if<PowerSum>(&f)) return {R::equal, p->k + 1};
    if (const auto* q = std::get_if<QProduct>(&f)) return {R::equal, q->r + 1};
    if (const auto* v = std::get_if<PowerSumVector>(&f)) return {R::at_most, v->mu.length() + v->mu.size()};
    return {};
}

/// Finite-difference degree of n -> Phi_n(F) over n_min..n_max, compared
/// with the expected degree.
[[nodiscard]] inline CheckReport verify_degree(const HookStatistic& f, int n_min, int n_max, PhiEvaluator& evaluator)
{
    using R = DegreeExpectation::Relation;
    detail::Stopwatch sw;
    CheckReport r;
    r.check_name = "degree";
    r.params = {{"statistic", describe(f)}, {"n_min", n_min}, {"n_max", n_max}};
    const auto expect = expected_degree(f);
    if (expect.relation != R::none) {
        r.rhs = std::to_string(expect.value);
        r.details["relation"] = expect.relation == R::equal ? "equal" : "at_most";
    }
    if (n_max < n_min || n_min < 0) throw std::domain_error("degree: empty or negative n range");

    std::vector<Rational> values;
    for (int n = n_min; n <= n_max; ++n) values.push_back(evaluator.phi(f, n));
    const auto degree = detect_degree(values);
    const int points = n_max - n_min + 1;

    if (!degree || (expect.relation != R::none && points < expect.value + 3)) {
        r.status = CheckStatus::inconclusive;
        r.details["reason"] = !degree ? "not enough vanishing differences" : "range shorter than expected degree + 3";
        if (degree) r.lhs = std::to_string(*degree);
    } else {
        r.lhs = std::to_string(*degree);
        switch (expect.relation) {
        case R::equal: r.status = *degree == expect.value ? CheckStatus::pass : CheckStatus::fail; break;
        case R::at_most: r.status = *degree <= expect.value ? CheckStatus::pass : CheckStatus::fail; break;
        case R::none: r.status = CheckStatus::pass; break;
        }
    }
    r.elapsed_ms = sw.ms();
    return r;
}

enum class TableFormat { csv, jsonl };

/// Phi_n(F) for n_min..n_max as CSV (header n,statistic,value) or JSON lines.
[[nodiscard]] inline std::string phi_table(const HookStatistic& f, int n_min, int n_max, TableFormat format,
                                           PhiEvaluator& evaluator)
{
    if (n_max < n_min || n_min < 0) throw std::domain_error("table: empty or negative n range");
    std::string out;
    const std::string name = describe(f);
    if (format == TableFormat::csv) out += "n,statistic,value\n";
    for (int n = n_min; n <= n_max; ++n) {
        const std::string value = to_exact_string(evaluator.phi(f, n));
        if (format == TableFormat::csv) {
            out += std::to_string(n) + "," + name + "," + value + "\n";
        } else {
            nlohmann::ordered_json j{{"n", n}, {"statistic", name}, {"value", value}};
            out += j.dump() + "\n";
        }
    }
    return out;
}

/// rsk_inverse(rsk(w)) = w for every w in S_n, one report per permutation in
/// lexicographic order. A repeated (P, Q) pair also fails.
[[nodiscard]] inline std::vector<CheckReport> verify_rsk_roundtrip(int n, int cap = kDefaultExhaustiveCap)
{
    detail::check_cap(n, cap);
    std::vector<CheckReport> out;
    std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> seen;
    detail::for_each_permutation(n, [&](const std::vector<int>& v) {
        detail::Stopwatch sw;
        const Permutation w(v);
        const auto pq = rsk(w);
        const bool fresh = seen.emplace(pq.insertion.rows(), pq.recording.rows()).second;
        const bool ok = fresh && pq.insertion.is_standard() && pq.recording.is_standard() && rsk_inverse(pq) == w;
        CheckReport r;
        r.check_name = "rsk-roundtrip";
        r.params = {{"n", n}, {"w", v}};
        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
        r.details = {{"shape", pq.shape().parts()}};
        r.elapsed_ms = sw.ms();
        out.push_back(std::move(r));
    });
    return out;
}

/// First row of sh(w) equals is(w) on all of S_n, and every shape lambda is
/// hit exactly f_lambda^2 times.
[[nodiscard]] inline std::vector<CheckReport> verify_rsk_schensted(int n, int cap = kDefaultExhaustiveCap)
{
    detail::check_cap(n, cap);
    std::vector<CheckReport> out;
    {
        detail::Stopwatch sw;
        std::int64_t agree = 0, total = 0;
        detail::for_each_permutation(n, [&](const std::vector<int>& v) {
            ++total;
            if (rsk_shape(Permutation(v)).first_part() == longest_increasing(v)) ++agree;
        });
        out.push_back(detail::equality_report("schensted", {{"n", n}}, Rational(agree), Rational(total), sw.ms()));
    }
    {
        detail::Stopwatch sw;
        const auto fibers = shape_fiber_counts(n, cap);
        bool ok = true;
        for (const auto& lambda : enumerate_partitions(n)) {
            const auto it = fibers.find(lambda);
            const BigInt count = it == fibers.end() ? BigInt(0) : BigInt(it->second);
            const BigInt f = syt_count(lambda);
            if (count != f * f) ok = false;
        }
        CheckReport r;
        r.check_name = "shape-fiber";
        r.params = {{"n", n}};
        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
        r.details = {{"shapes", fibers.size()}};
        r.elapsed_ms = sw.ms();
        out.push_back(std::move(r));
    }
    return out;
}

/// Acceptance brackets for the sampled mean of is(w)/sqrt(n), p = 1.
struct MomentBracket {
    int n;
    double low;
    double high;
};
inline constexpr MomentBracket kMomentBrackets[] = {{100, 1.5, 1.9}};

/// Monte Carlo estimate of E[(is/sqrt n)^p]. For n within the exhaustive cap
/// the estimate must lie within 3 standard errors of the exact value; for
/// (n, p = 1) with a documented bracket it must lie in the bracket; otherwise
/// the estimate is reported as inconclusive.
[[nodiscard]] inline CheckReport verify_rsk_moment(int n, int p, std::int64_t samples, std::uint64_t seed,
                                                   int cap = kDefaultExhaustiveCap)
{
    detail::Stopwatch sw;
    const auto est = monte_carlo_is_moment(n, p, samples, seed);
    CheckReport r;
    r.check_name = "is-moment";
    r.params = {{"n", n}, {"p", p}, {"samples", samples}, {"seed", seed}};
    r.details = {{"mean", est.mean}, {"std_error", est.std_error}};
    r.status = CheckStatus::inconclusive;
    if (n <= cap) {
        const double exact = exact_is_moment(n, p, cap);
        r.details["exact_mean"] = exact;
        r.details["tolerance_std_errors"] = 3;
        r.status = std::abs(est.mean - exact) <= 3 * est.std_error ? CheckStatus::pass : CheckStatus::fail;
    } else if (p == 1) {
        for (const auto& b : kMomentBrackets)
            if (b.n == n) {
                r.details["bracket"] = {b.low, b.high};
                r.status = est.mean >= b.low && est.mean <= b.high ? CheckStatus::pass : CheckStatus::fail;
            }
    }
    r.elapsed_ms = sw.ms();
    return r;
}

} // namespace hookstat

#endif
