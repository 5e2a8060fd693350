#pragma once

/**
 * @file cli.hpp
 * @brief Command-line harness: parses flags (or a key=value config file),
 *        runs the requested sweep and writes a CSV or JSON report.
 *
 * Exit codes: 0 when no unexpected failure occurred (known exceptions are
 * fine), 1 on any unexpected violation, 2 on usage or configuration errors.
 */

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "powres/check_record.hpp"
#include "powres/counting.hpp"
#include "powres/report.hpp"
#include "powres/residue.hpp"
#include "powres/sweeps.hpp"
#include "powres/theorem2.hpp"

namespace powres {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

struct SweepConfig {
    std::int64_t prime_max = 1000;
    std::vector<std::int64_t> k_set{2};
    std::vector<int> rings{-1, -2, -3, -7, -11};
    std::int64_t norm_bound = 1000;
    std::int64_t a_max = 30;
    std::int64_t b_max = 30;
    std::int64_t n_max = 30;
    CountMode mode = CountMode::strict;
    std::string output_path;  // empty: standard output
    ReportFormat format = ReportFormat::csv;
    unsigned workers = 1;
    std::optional<std::int64_t> modulus;  // table / stats on a single modulus
    std::int64_t composite_max = 0;       // also check R*n < m on every modulus up to this

    /// Throws std::invalid_argument describing the first bad field.
    void validate() const {
        auto positive = [](std::int64_t v, const char* name) {
            if (v < 1)
                throw std::invalid_argument(std::string(name) + " must be >= 1");
        };
        positive(prime_max, "--prime-max");
        positive(norm_bound, "--norm-bound");
        positive(a_max, "--a-max");
        positive(b_max, "--b-max");
        positive(n_max, "--n-max");
        if (workers < 1)
            throw std::invalid_argument("--workers must be >= 1");
        if (k_set.empty())
            throw std::invalid_argument("--k must name at least one exponent");
        for (auto k : k_set)
            positive(k, "--k entries");
        for (int d : rings)
            (void)RingSpec(d);
        if (modulus)
            positive(*modulus, "--m");
        if (composite_max < 0)
            throw std::invalid_argument("--m-max must be >= 0");
    }
};

/// 0 unless some record failed without being on a known-exception list.
inline int exit_code_for(const std::vector<CheckRecord>& records) {
    return any_unexpected_failure(records) ? exit_violation : exit_ok;
}

namespace detail {

inline const char* class_label(ResidueClass c) {
    switch (c) {
    case ResidueClass::residue: return "residue";
    case ResidueClass::nonresidue: return "nonresidue";
    case ResidueClass::noncoprime: return "noncoprime";
    }
    return "?";
}

inline std::string render_table(const SweepConfig& cfg) {
    std::ostringstream os;
    os << "m,k,a,class\n";
    for (auto k : cfg.k_set) {
        auto table = build_residue_table(*cfg.modulus, k);
        auto cls = table.classes();
        for (std::size_t a = 0; a < cls.size(); ++a)
            os << *cfg.modulus << ',' << k << ',' << a << ',' << class_label(cls[a]) << '\n';
    }
    return os.str();
}

inline std::string render_stats(const SweepConfig& cfg) {
    std::vector<std::int64_t> moduli;
    if (cfg.modulus) {
        moduli.push_back(*cfg.modulus);
    } else {
        for (auto p : primes_up_to(cfg.prime_max))
            if (p > 2)
                moduli.push_back(p);
    }
    std::ostringstream os;
    os << "m,k,n,R,N\n";
    for (auto m : moduli)
        for (auto k : cfg.k_set) {
            auto s = run_stats(m, k);
            os << m << ',' << k << ',' << opt_str(s.n) << ',' << s.R << ',' << opt_str(s.N) << '\n';
        }
    return os.str();
}

inline void emit(const std::string& text, const SweepConfig& cfg, std::ostream& out) {
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream os(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw std::runtime_error("cannot open report for writing: " + cfg.output_path);
    os << text;
    if (!os.flush())
        throw std::runtime_error("failed writing report: " + cfg.output_path);
}

inline void append(std::vector<CheckRecord>& dst, std::vector<CheckRecord> src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
}

inline std::vector<CheckRecord> run_sweep(const std::string& command, const SweepConfig& cfg) {
    std::vector<CheckRecord> records;
    const bool all = command == "all";
    if (command == "sweep-thm1" || all) {
        if (cfg.prime_max < 3)
            throw std::invalid_argument("--prime-max must be >= 3 for prime sweeps");
        append(records, sweep_primes(cfg.prime_max, cfg.k_set, cfg.workers));
        if (cfg.composite_max > 1)
            append(records, sweep_moduli(cfg.composite_max, cfg.k_set, cfg.workers));
    }
    if (command == "sweep-thm2" || all) {
        if (cfg.rings.empty())
            throw std::invalid_argument("--ring must name at least one ring for sweep-thm2");
        if (cfg.norm_bound < 2)
            throw std::invalid_argument("--norm-bound must be >= 2 for sweep-thm2");
        append(records, sweep_theorem2(cfg.rings, cfg.norm_bound, cfg.k_set, cfg.workers));
    }
    if (command == "verify-thm3")
        append(records, sweep_identity(cfg.a_max, cfg.b_max, cfg.n_max, cfg.mode, cfg.workers));
    if (all) {
        append(records, sweep_identity(cfg.a_max, cfg.b_max, cfg.n_max, CountMode::strict, cfg.workers));
        append(records, sweep_identity(cfg.a_max, cfg.b_max, cfg.n_max, CountMode::weak, cfg.workers));
    }
    if (command == "gauss-check" || all)
        append(records, sweep_gauss_lemma(cfg.prime_max, cfg.workers));
    sort_records(records);
    return records;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    SweepConfig cfg;
    std::string mode = "strict";
    std::string format = "csv";
    std::int64_t modulus = 0;

    CLI::App app{"Power-residue statistics and exhaustive bound verification", "powres"};
    app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");
    app.require_subcommand(1, 1);
    app.option_defaults()->always_capture_default();

    app.add_option("--prime-max", cfg.prime_max, "Largest prime modulus in prime sweeps");
    app.add_option("--k", cfg.k_set, "Comma-separated exponents")->delimiter(',');
    app.add_option("--ring", cfg.rings, "Comma-separated d values from {-1,-2,-3,-7,-11}")->delimiter(',');
    app.add_option("--norm-bound", cfg.norm_bound, "Largest irreducible norm in sweep-thm2");
    app.add_option("--a-max", cfg.a_max, "Identity bound on a");
    app.add_option("--b-max", cfg.b_max, "Identity bound on b");
    app.add_option("--n-max", cfg.n_max, "Identity bound on n");
    app.add_option("--mode", mode, "Half-count comparison")->check(CLI::IsMember({"strict", "weak"}));
    app.add_option("--out", cfg.output_path, "Report path (default: standard output)");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--workers", cfg.workers, "Worker threads");
    app.add_option("--m", modulus, "Single modulus for table/stats");
    app.add_option("--m-max", cfg.composite_max, "Also check R*n < m on every modulus up to this");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"table", "Print the residue classification of --m for each --k"},
        {"stats", "Print n, R, N for --m, or every odd prime up to --prime-max"},
        {"sweep-thm1", "Least non-residue and run-length bounds over primes"},
        {"sweep-thm2", "Minimal non-residues in quadratic rings"},
        {"verify-thm3", "Half-count identity over (a, b, n, eps)"},
        {"gauss-check", "Count parity against Euler's criterion"},
        {"all", "Every sweep, both identity modes"},
    };
    for (const auto& [name, help] : commands)
        app.add_subcommand(name, help)->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    cfg.mode = mode == "weak" ? CountMode::weak : CountMode::strict;
    cfg.format = format == "json" ? ReportFormat::json : ReportFormat::csv;
    if (app.count("--m") > 0)
        cfg.modulus = modulus;

    try {
        cfg.validate();
        if (command == "table") {
            if (!cfg.modulus)
                throw std::invalid_argument("table needs --m");
            detail::emit(detail::render_table(cfg), cfg, out);
            return exit_ok;
        }
        if (command == "stats") {
            detail::emit(detail::render_stats(cfg), cfg, out);
            return exit_ok;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    std::vector<CheckRecord> records;
    try {
        records = detail::run_sweep(command, cfg);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        // overflow, undecidable interval, exhausted search: never a usage problem
        err << "internal failure: " << e.what() << '\n';
        return exit_violation;
    }

    try {
        detail::emit(render_report(records, cfg.format), cfg, out);
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    std::size_t unexpected = 0, known = 0, vacuous = 0;
    for (const auto& r : records) {
        unexpected += r.unexpected_failure();
        known += r.known_exception;
        vacuous += r.vacuous();
    }
    err << command << ": " << records.size() << " records, " << unexpected << " unexpected failures, " << known
        << " known exceptions, " << vacuous << " vacuous\n";
    for (const auto& r : records)
        if (r.unexpected_failure())
            err << "VIOLATION " << to_string(r.name) << " m=" << r.m << " k=" << detail::opt_str(r.k) << ' '
                << r.extra << '\n';
    return exit_code_for(records);
}

}  // namespace powres
