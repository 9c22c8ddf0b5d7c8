#pragma once

// Command-line front end. `run` is callable in-process so tests can drive it.
//
// Exit codes: 0 success, 1 a check or invariant failed, 2 bad arguments.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gpfree/acceptance.hpp"
#include "gpfree/density.hpp"
#include "gpfree/enumeration.hpp"
#include "gpfree/freegroup.hpp"
#include "gpfree/greedy.hpp"
#include "gpfree/report.hpp"

namespace gpfree::cli {

/// Relative --output paths resolve against this directory when it is set.
inline constexpr const char* kOutputDirEnv = "GPFREE_OUTPUT_DIR";

enum class Format { json, csv, text };

/// Defaults reproduce the acceptance runs.
struct RunConfig {
    Format format = Format::json;
    std::string output;  // empty: standard output

    std::int64_t norm = 7;
    std::optional<std::int64_t> upto;
    std::optional<std::int64_t> table;

    std::optional<unsigned> upper_terms;

    std::int64_t max_prime = 1000000;
    unsigned max_exponent = 40;

    std::int64_t annuli_max_norm = 48 * 48;
    std::string intervals = "48:45,40:36,32:27,24:12,9:8,4:1";

    std::int64_t greedy_max_norm = 49;

    std::uint64_t max_len = 162;
    unsigned density_n = 1;
    std::int64_t witness_n = 95;

    bool quick = false;
};

inline AnnuliSpec parse_intervals(const std::string& text) {
    AnnuliSpec spec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("--intervals", "expected lo:hi pairs");
        std::size_t used_lo = 0, used_hi = 0;
        const std::string lo_text = item.substr(0, colon), hi_text = item.substr(colon + 1);
        std::int64_t lo = 0, hi = 0;
        try {
            lo = std::stoll(lo_text, &used_lo);
            hi = std::stoll(hi_text, &used_hi);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--intervals", "malformed number in '" + item + "'");
        }
        if (used_lo != lo_text.size() || used_hi != hi_text.size())
            throw CLI::ValidationError("--intervals", "malformed number in '" + item + "'");
        spec.intervals.emplace_back(lo, hi);
    }
    if (spec.intervals.empty() || !spec.well_formed())
        throw CLI::ValidationError("--intervals", "intervals must satisfy lo > hi >= 1 and be disjoint");
    return spec;
}

inline std::filesystem::path resolve_output(const std::string& output) {
    std::filesystem::path p(output);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) return std::filesystem::path(dir) / p;
    }
    return p;
}

namespace detail {

inline void emit_json(std::ostream& os, const report::json& j) { os << j.dump(2) << '\n'; }

/// Flat text rendering of the top-level scalar fields.
inline void emit_text(std::ostream& os, const report::json& j) {
    for (const auto& [key, value] : j.items()) {
        if (value.is_array() && value.size() > 16) {
            os << key << ": [" << value.size() << " entries]\n";
        } else {
            os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }
}

inline void emit(std::ostream& os, Format fmt, const report::json& j) {
    if (fmt == Format::text) {
        emit_text(os, j);
    } else {
        emit_json(os, j);
    }
}

}  // namespace detail

/// Runs one invocation; argv[0] is the program name.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact computations for geometric-progression-free sets in the Hurwitz order and in "
                 "<x, y : x^2 = y^2 = 1>"};
    app.require_subcommand(1);
    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("-o,--output", cfg.output, std::string("Write to this file (relative to $") + kOutputDirEnv + " if set)");

    auto* count = app.add_subcommand("count", "Quaternions of one norm, up to a bound, or a CSV table");
    count->add_option("--norm", cfg.norm, "Norm N >= 1")->check(CLI::PositiveNumber);
    count->add_option("--upto", cfg.upto, "Cumulative count S(M)")->check(CLI::PositiveNumber);
    count->add_option("--table", cfg.table, "Table norm,count,cumulative for 1..M (csv)")->check(CLI::PositiveNumber);

    auto* enumerate = app.add_subcommand("enumerate", "List all quaternions of one norm");
    enumerate->add_option("--norm", cfg.norm, "Norm N >= 1")->check(CLI::PositiveNumber);

    auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on m_Hur");
    bounds->add_option("--terms", cfg.upper_terms, "Truncate the upper-bound series after this many terms")
        ->check(CLI::PositiveNumber);

    auto* rankin = app.add_subcommand("rankin", "Truncated Euler product for d(Q_Ran)");
    rankin->add_option("--max-prime", cfg.max_prime, "Largest prime multiplied in")->check(CLI::Range(3, 100000000));
    rankin->add_option("--max-exponent", cfg.max_exponent, "Largest exponent kept per factor")->check(CLI::Range(1, 400));

    auto* annuli = app.add_subcommand("annuli-check", "Brute-force GP check on the annuli norm set");
    annuli->add_option("--max-norm", cfg.annuli_max_norm, "Largest norm examined")->check(CLI::Range(1, 10000000));
    annuli->add_option("--intervals", cfg.intervals, "Interval divisors lo:hi, comma separated");

    auto* greedy = app.add_subcommand("greedy-hur", "Greedy GP-free set of Hurwitz quaternions");
    greedy->add_option("--max-norm", cfg.greedy_max_norm, "Largest norm processed")->check(CLI::Range(1, 2000));
    greedy->add_option("--emit", cfg.format, "json or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    auto* fg = app.add_subcommand("freegroup", "The group <x, y : x^2 = y^2 = 1>");
    fg->require_subcommand(1);
    auto* fg_greedy = fg->add_subcommand("greedy", "Greedy GP-free set G up to a word length");
    fg_greedy->add_option("--max-len", cfg.max_len, "Largest word length")->check(CLI::Range(0, 2000));
    auto* fg_density = fg->add_subcommand("density", "Exact ratio at length 2*3^n");
    fg_density->add_option("--n", cfg.density_n, "n >= 0")->check(CLI::Range(0, 30));
    auto* fg_witness = fg->add_subcommand("witness", "Progression excluding an integer from A");
    fg_witness->add_option("--n", cfg.witness_n, "Any integer");

    auto* verify = app.add_subcommand("verify-all", "Run every acceptance check");
    verify->add_flag("--quick", cfg.quick, "Skip the norm-343 greedy run");
    verify->add_option("--intervals", cfg.intervals, "Annuli divisors (mutation testing)");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    if (!args.empty()) args.pop_back();  // program name
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return 2;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file.open(resolve_output(cfg.output));
        if (!file) {
            err << "cannot open output file " << resolve_output(cfg.output) << '\n';
            return 2;
        }
        sink = &file;
    }
    std::ostream& os = *sink;

    try {
        if (*count) {
            if (cfg.table) {
                build_norm_count(*cfg.table).write_csv(os);
            } else if (cfg.upto) {
                detail::emit(os, cfg.format, report::count_upto_report(*cfg.upto));
            } else {
                detail::emit(os, cfg.format, report::count_report(cfg.norm));
            }
        } else if (*enumerate) {
            if (cfg.format == Format::csv) {
                os << "da,db,dc,dd\n";
                for (const auto& q : enumerate_norm(cfg.norm))
                    os << q.da() << ',' << q.db() << ',' << q.dc() << ',' << q.dd() << '\n';
            } else {
                detail::emit(os, cfg.format, report::enumerate_report(cfg.norm));
            }
        } else if (*bounds) {
            auto j = report::bounds_report();
            if (cfg.upper_terms) j["upper_truncated"] = report::rational_json(upper_bound_density(cfg.upper_terms));
            detail::emit(os, cfg.format, j);
        } else if (*rankin) {
            detail::emit(os, cfg.format, report::rankin_report(cfg.max_prime, cfg.max_exponent));
        } else if (*annuli) {
            const auto j = report::annuli_report(cfg.annuli_max_norm, parse_intervals(cfg.intervals));
            detail::emit(os, cfg.format, j);
            return j["gp_free"].get<bool>() ? 0 : 1;
        } else if (*greedy) {
            const auto rep = build_greedy(cfg.greedy_max_norm);
            if (cfg.format == Format::csv) {
                report::greedy_report_csv(rep, os);
            } else {
                detail::emit(os, cfg.format, report::greedy_report_json(rep));
            }
        } else if (*fg_greedy) {
            const auto j = report::freegroup_greedy_report(cfg.max_len);
            if (cfg.format == Format::csv) {
                os << "word,index,w2_image\n";
                for (std::size_t i = 0; i < j["included"].size(); ++i) {
                    const auto w = Word::parse(j["included"][i].get<std::string>());
                    os << w.to_string() << ',' << index_of(w) << ',' << w2_to_int(w) << '\n';
                }
            } else {
                detail::emit(os, cfg.format, j);
            }
        } else if (*fg_density) {
            const auto j = report::freegroup_density_report(cfg.density_n);
            if (cfg.format == Format::text) {
                os << j["ratio_g"]["exact"].get<std::string>() << '\n';
            } else {
                detail::emit(os, cfg.format, j);
            }
        } else if (*fg_witness) {
            detail::emit(os, cfg.format, report::freegroup_witness_report(cfg.witness_n));
        } else if (*verify) {
            acceptance::Options opts;
            opts.quick = cfg.quick;
            opts.annuli = parse_intervals(cfg.intervals);
            bool all = true;
            for (const auto& check : acceptance::checks(opts)) {
                const auto result = acceptance::run_check(check);
                acceptance::print_result(os, result);
                os.flush();
                all = all && result.passed;
            }
            os << (all ? "all checks passed" : "some checks failed") << '\n';
            return all ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace gpfree::cli
