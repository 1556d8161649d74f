#pragma once

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncsf/expr.hpp"
#include "ncsf/verify.hpp"

namespace ncsf {

namespace detail {

/// NCSF_MAX_DEGREE overrides the default enumeration cap.
inline int env_cap() {
    const char* v = std::getenv("NCSF_MAX_DEGREE");
    if (!v) return kDefaultDegreeCap;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || n < 1 || n > 64) return kDefaultDegreeCap;
    return static_cast<int>(n);
}

inline void print_stats(const Letters& w, bool as_permutation, std::ostream& out) {
    out << "word: " << word_str(w) << "\n";
    out << "descent: " << descent_composition(w).str() << "\n";
    bool is_perm = true;
    try {
        Permutation p(w);
        out << "recoil: " << recoil_composition(p).str() << "\n";
        out << "genocchi: " << genocchi_composition(p).str() << "\n";
    } catch (const std::invalid_argument&) {
        is_perm = false;
    }
    if (as_permutation && !is_perm)
        throw std::invalid_argument("stats perm: input is not a permutation");
    out << "wcomp: " << word_composition(pack(w)).str() << "\n";
}

}  // namespace detail

/// Dispatches one command line (without the program name). Returns 0 on
/// success or full verification, 1 on verification failure, 2 on usage or
/// input errors.
inline int run_command(std::vector<std::string> args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"bases, statistics and quotients of noncommutative symmetric functions"};
    app.name("ncsf");
    app.require_subcommand(1);
    int exit_code = 0;

    // stats
    CLI::App* stats = app.add_subcommand("stats", "statistics of a permutation or packed word");
    stats->require_subcommand(1);
    std::string stats_word;
    CLI::App* stats_perm = stats->add_subcommand("perm", "all four statistics of a permutation");
    stats_perm->add_option("word", stats_word, "permutation, e.g. 3142")->required();
    stats_perm->callback([&] {
        Letters w = parse_word(stats_word);
        detail::print_stats(w, true, out);
    });
    CLI::App* stats_pw = stats->add_subcommand("word", "statistics of a packed word");
    stats_pw->add_option("word", stats_word, "packed word, e.g. 1121")->required();
    stats_pw->callback([&] {
        Letters w = parse_word(stats_word);
        PackedWord u(w);  // validates packedness
        detail::print_stats(u.letters(), false, out);
    });

    // matrix
    CLI::App* matrix = app.add_subcommand("matrix", "transition matrix for a degree");
    std::string pair_arg, layout_arg = "paper", format_arg = "text";
    int matrix_n = 0, matrix_cap = detail::env_cap();
    bool witnesses = false;
    matrix->add_option("pair", pair_arg, "RL or RPsi")
        ->required()
        ->check(CLI::IsMember({"RL", "RPsi"}));
    matrix->add_option("n", matrix_n, "degree")->required()->check(CLI::PositiveNumber);
    matrix->add_option("--layout", layout_arg, "paper (rows = statistic) or theorem")
        ->check(CLI::IsMember({"paper", "theorem"}));
    matrix->add_option("--format", format_arg, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    matrix->add_flag("--witnesses", witnesses, "attach per-cell word lists");
    matrix->add_option("--max-degree", matrix_cap, "raise the enumeration cap");
    matrix->callback([&] {
        if (matrix_n >= 9)
            err << "warning: enumerating degree " << matrix_n
                << " walks a large set; this may take a while\n";
        MatrixPair pair = pair_arg == "RL" ? MatrixPair::RL : MatrixPair::RPsi;
        MatrixLayout layout =
            layout_arg == "paper" ? MatrixLayout::paper : MatrixLayout::theorem;
        TransitionMatrix m = transition_matrix(pair, matrix_n, witnesses, matrix_cap);
        if (format_arg == "text") {
            out << matrix_text(m, layout);
            if (witnesses) out << "\n" << matrix_witness_text(m, layout);
        } else if (format_arg == "csv") {
            out << matrix_csv(m, layout);
        } else {
            out << matrix_json(m, layout).dump(2) << "\n";
        }
    });

    // expand
    CLI::App* expand = app.add_subcommand("expand", "expand an expression in a basis");
    std::string expr_arg, in_arg, expand_format = "text";
    expand->add_option("expression", expr_arg, "e.g. \"2*L[2,2] + L[1,3]\"")->required();
    expand->add_option("--in", in_arg, "target basis: Psi, L, S, T or U")->required();
    expand->add_option("--format", expand_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    expand->callback([&] {
        ParsedExpr e = parse_expression(expr_arg);
        EvalTarget target = parse_target(in_arg);
        if (expand_format == "text")
            out << evaluate(e, target, detail::env_cap()) << "\n";
        else
            out << evaluate_json(e, target, detail::env_cap()).dump(2) << "\n";
    });

    // verify
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    std::string which, golden_dir;
    int verify_degree = 6;
    verify->add_option("suite", which, "tables, ideal, products, oracle, sequences or all")
        ->required()
        ->check(CLI::IsMember({"tables", "ideal", "products", "oracle", "sequences", "all"}));
    verify->add_option("--max-degree", verify_degree, "largest degree to check");
    verify->add_option("--golden", golden_dir, "directory of golden table files");
    verify->callback([&] {
        int cap = std::max(detail::env_cap(), verify_degree);
        VerifyReport report;
        if (which == "tables") {
            report.merge(verify_tables(golden_dir));
            report.merge(verify_witnesses());
        } else if (which == "ideal") {
            report = verify_ideal(verify_degree, cap);
        } else if (which == "products") {
            report = verify_products(verify_degree, verify_degree, verify_degree, cap);
        } else if (which == "oracle") {
            report = verify_oracle(verify_degree, std::min(verify_degree, 7), cap);
        } else if (which == "sequences") {
            report = verify_sequences(verify_degree, cap);
        } else {
            report = verify_all(verify_degree, golden_dir, cap);
        }
        out << report.str();
        if (!report.all_pass()) {
            exit_code = 1;
        } else {
            out << "all " << report.checks.size() << " checks passed\n";
        }
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const SemanticError& e) {
        err << "semantic error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        err << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace ncsf
