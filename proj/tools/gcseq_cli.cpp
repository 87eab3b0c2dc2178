// gcseq: generate and analyze period-2p generalized cyclotomic sequences.
//
// Exit codes: 0 ran to completion (findings allowed), 1 usage or argument
// error, 2 internal consistency failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcseq/gcseq.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_inconsistent = 2;

gcseq::BinarySequence load_bits(const std::string& arg) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (fs::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        if (!in) throw gcseq::ArgumentError("cannot read " + arg);
        std::string line;
        std::getline(in, line);
        return gcseq::BinarySequence::from_string(line);
    }
    return gcseq::BinarySequence::from_string(arg);
}

bool linear_disagrees(const gcseq::Json& j) {
    return j.contains("linear") && !j["linear"]["methods_agree"].get<bool>();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized cyclotomic sequences of period 2p: generation and complexity analysis"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "print the sequence as a 0/1 string, s_0 first");
    gcseq::i64 gen_p = 0;
    std::optional<gcseq::i64> gen_g;
    gen->add_option("--p", gen_p, "odd prime")->required();
    gen->add_option("--g", gen_g, "common primitive root of p and 2p (default: smallest odd one)");

    auto* ana = app.add_subcommand("analyze", "full report for one sequence");
    std::optional<gcseq::i64> ana_p, ana_g;
    std::optional<gcseq::u64> ana_r;
    gcseq::u64 ana_cap = gcseq::default_m_cap;
    std::string ana_format = "json";
    std::string ana_bits;
    auto* p_opt = ana->add_option("--p", ana_p, "odd prime");
    ana->add_option("--g", ana_g, "common primitive root of p and 2p");
    ana->add_option("--r", ana_r, "field characteristic for linear complexity (prime >= 5, != p)");
    ana->add_option("--m-cap", ana_cap, "largest extension degree for the root-counting route")
        ->check(CLI::Range(1, 64));
    ana->add_option("--format", ana_format)->check(CLI::IsMember({"json", "text"}));
    auto* bits_opt = ana->add_option("--bits", ana_bits, "analyze a raw bit string, or a file holding one");
    p_opt->excludes(bits_opt);

    auto* scan = app.add_subcommand("scan", "sweep a prime range");
    gcseq::ScanConfig cfg;
    std::vector<gcseq::u64> scan_r;
    std::vector<std::string> scan_checks;
    std::string scan_out, scan_format = "json";
    scan->add_option("--p-min", cfg.p_min)->capture_default_str();
    scan->add_option("--p-max", cfg.p_max)->capture_default_str();
    scan->add_option("--r", scan_r, "comma-separated field characteristics")->delimiter(',');
    scan->add_option("--checks", scan_checks, "lc,adic,autocorr,lemmas")->delimiter(',')->required();
    scan->add_option("--out", scan_out, "report path (default: standard output)");
    scan->add_option("--format", scan_format)->check(CLI::IsMember({"json", "csv"}));
    scan->add_option("--m-cap", cfg.m_cap)->check(CLI::Range(1, 64))->capture_default_str();
    scan->add_option("--workers", cfg.workers, "0 = one per core, at most 8");

    auto* ver = app.add_subcommand("verify-paper", "replay the published worked examples and autocorrelation table");
    std::string ver_format = "json";
    ver->add_option("--format", ver_format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen) {
            const auto params = gcseq::PrimeParams::make(gen_p, gen_g);
            std::cout << gcseq::generate(params).to_string() << '\n';
            return exit_ok;
        }

        if (*ana) {
            gcseq::AnalyzeOptions opt{ana_r, ana_cap};
            gcseq::Json report;
            if (!ana_bits.empty()) {
                if (ana_g) throw gcseq::ArgumentError("--g applies only with --p");
                if (ana_r) gcseq::require_field_prime(*ana_r);
                report = gcseq::analyze_raw(load_bits(ana_bits), opt);
            } else {
                if (!ana_p) throw gcseq::ArgumentError("analyze needs --p or --bits");
                report = gcseq::analyze(gcseq::PrimeParams::make(*ana_p, ana_g), opt);
            }
            if (ana_format == "text")
                gcseq::render_text(report, std::cout);
            else
                std::cout << report.dump(2) << '\n';
            if (linear_disagrees(report)) {
                std::cerr << "error: linear complexity methods disagree\n";
                return exit_inconsistent;
            }
            return exit_ok;
        }

        if (*scan) {
            cfg.r_list = scan_r;
            for (const auto& c : scan_checks) {
                auto parsed = gcseq::parse_scan_check(c);
                if (!parsed) throw gcseq::ArgumentError("unknown check '" + c + "'");
                cfg.checks.insert(*parsed);
            }
            cfg.validate();
            std::ofstream file;
            if (!scan_out.empty()) {
                file.open(scan_out);
                if (!file) throw gcseq::ArgumentError("cannot write " + scan_out);
            }
            const auto res = gcseq::run_scan(cfg);
            std::ostream& out = scan_out.empty() ? std::cout : file;
            if (scan_format == "csv")
                out << gcseq::scan_to_csv(res);
            else
                out << res.report.dump(2) << '\n';
            if (!out) throw gcseq::ArgumentError("write failed for " + (scan_out.empty() ? "stdout" : scan_out));
            // With the report on stdout the summary goes to stderr so the report stays parseable.
            (scan_out.empty() ? std::cerr : std::cout) << gcseq::scan_summary_text(res);
            if (!res.consistent) {
                std::cerr << "error: linear complexity methods disagree\n";
                return exit_inconsistent;
            }
            return exit_ok;
        }

        if (*ver) {
            const auto outcome = gcseq::verify_paper();
            if (ver_format == "text")
                std::cout << gcseq::to_text(outcome);
            else
                std::cout << gcseq::to_json(outcome).dump(2) << '\n';
            return exit_ok;
        }
    } catch (const gcseq::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return exit_inconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
