// hookstat: command-line verification of hook-length identities.
//
// Exit codes: 0 all checks passed (erratum-confirmed counts as passing),
// 1 some check failed, 2 usage, resource or I/O error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hookstat/hookstat.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    int max_n = 12;
    int min_n = 1;
    int max_r = 6;
    int order = 8;
    std::string variant = "corrected";
    std::string stat = "p1";
    std::string format = "jsonl";
    std::string out_path;
    std::string rsk_mode;
    int n = 5;
    int p = 1;
    std::int64_t samples = 10000;
    std::uint64_t seed = 7;
    int cap = hookstat::kDefaultExhaustiveCap;
    bool timing = false;
};

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::ios_base::failure("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int emit(const std::vector<hookstat::CheckReport>& reports, const Options& opt)
{
    Output out(opt.out_path);
    for (const auto& r : reports) out.stream() << hookstat::to_json_line(r, opt.timing) << '\n';
    out.stream().flush();
    if (!out.stream()) throw std::ios_base::failure("write failed");
    return hookstat::any_failed(reports) ? kExitFail : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of hook-length identities over integer partitions"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--out", opt.out_path, "Write output to PATH instead of stdout");
    app.add_flag("--timing", opt.timing, "Record elapsed_ms (otherwise 0, for byte-stable output)");

    auto* okada = app.add_subcommand("verify-okada", "Check P_r(n) against the product formula");
    okada->add_option("--max-n", opt.max_n, "Largest n")->check(CLI::Range(1, 40));
    okada->add_option("--max-r", opt.max_r, "Largest r")->check(CLI::Range(0, 40));

    auto* series = app.add_subcommand("verify-series", "Check the hook product and Phi_n(e_j) generating functions");
    series->add_option("--order", opt.order, "Truncation order")->check(CLI::Range(0, 12));
    series->add_option("--variant", opt.variant, "Logarithm expansion")
        ->check(CLI::IsMember({"corrected", "as_printed"}));

    auto* rsk = app.add_subcommand("verify-rsk", "RSK and longest increasing subsequence checks");
    rsk->add_option("mode", opt.rsk_mode, "roundtrip | schensted | moment")
        ->required()
        ->check(CLI::IsMember({"roundtrip", "schensted", "moment"}));
    rsk->add_option("--n", opt.n, "Permutation size")->check(CLI::PositiveNumber);
    rsk->add_option("--p", opt.p, "Moment exponent")->check(CLI::PositiveNumber);
    rsk->add_option("--samples", opt.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
    rsk->add_option("--seed", opt.seed, "Monte Carlo seed");
    rsk->add_option("--cap", opt.cap, "Largest n for exhaustive enumeration")->check(CLI::Range(1, 12));

    auto* degree = app.add_subcommand("degree", "Finite-difference degree of n -> Phi_n(F)");
    degree->add_option("--stat", opt.stat, "Statistic: q<r>, p<k>, e<j>, p[m1,m2,...]");
    degree->add_option("--min-n", opt.min_n, "Smallest n")->check(CLI::NonNegativeNumber);
    degree->add_option("--max-n", opt.max_n, "Largest n")->check(CLI::Range(0, 40));

    auto* table = app.add_subcommand("table", "Tabulate Phi_n(F)");
    table->add_option("--stat", opt.stat, "Statistic: q<r>, p<k>, e<j>, p[m1,m2,...]");
    table->add_option("--min-n", opt.min_n, "Smallest n")->check(CLI::NonNegativeNumber);
    table->add_option("--max-n", opt.max_n, "Largest n")->check(CLI::Range(0, 40));
    table->add_option("--format", opt.format, "csv | jsonl")->check(CLI::IsMember({"csv", "jsonl"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        hookstat::PhiEvaluator evaluator;
        if (*okada) return emit(hookstat::verify_okada(opt.max_n, opt.max_r, evaluator), opt);
        if (*series) {
            const auto variant = opt.variant == "corrected" ? hookstat::LogExpansion::corrected
                                                            : hookstat::LogExpansion::as_printed;
            return emit({hookstat::verify_hook_product(opt.order), hookstat::verify_series(opt.order, variant, evaluator)},
                        opt);
        }
        if (*rsk) {
            if (opt.rsk_mode == "roundtrip") return emit(hookstat::verify_rsk_roundtrip(opt.n, opt.cap), opt);
            if (opt.rsk_mode == "schensted") return emit(hookstat::verify_rsk_schensted(opt.n, opt.cap), opt);
            return emit({hookstat::verify_rsk_moment(opt.n, opt.p, opt.samples, opt.seed, opt.cap)}, opt);
        }
        const auto stat = hookstat::parse_statistic(opt.stat);
        if (*degree) return emit({hookstat::verify_degree(stat, opt.min_n, opt.max_n, evaluator)}, opt);
        if (*table) {
            const auto format = opt.format == "csv" ? hookstat::TableFormat::csv : hookstat::TableFormat::jsonl;
            const std::string text = hookstat::phi_table(stat, opt.min_n, opt.max_n, format, evaluator);
            Output out(opt.out_path);
            out.stream() << text;
            out.stream().flush();
            if (!out.stream()) throw std::ios_base::failure("write failed");
            return 0;
        }
    } catch (const hookstat::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
