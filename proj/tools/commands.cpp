#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tabkey/census.hpp"
#include "tabkey/demazure.hpp"
#include "tabkey/enumerate.hpp"
#include "tabkey/jdt.hpp"
#include "tabkey/scanning.hpp"
#include "tabkey/text_io.hpp"

namespace tabkey::cli {

namespace {

struct KeyArgs {
    std::string input;
    bool explain = false;
    bool oracle = false;
};

struct VerifyArgs {
    int max_boxes = 0;
    int max_entry = 0;
    unsigned jobs = 1;
    bool check_swaps = false;
};

struct DemazureArgs {
    std::vector<int> mu;
    std::vector<int> w;
    int n = 0;
    std::string engine = "scan";
    bool all_engines = false;
};

struct EnumerateArgs {
    std::vector<int> shape;
    int n = 0;
};

Tableau read_input(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path.empty() || path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) {
            throw std::runtime_error("cannot open " + path);
        }
        buffer << file.rdbuf();
    }
    return parse_tableau(buffer.str());
}

void explain_scan(const std::vector<ScanColumnTrace>& traces, std::ostream& err) {
    for (const auto& column : traces) {
        for (std::size_t p = 0; p < column.passes.size(); ++p) {
            err << "column " << column.start_column + 1 << " pass " << p + 1 << ": "
                << format_sequence(column.passes[p].values) << '\n';
        }
    }
}

int right_key_command(const KeyArgs& args, std::istream& in, std::ostream& out,
                      std::ostream& err) {
    const Tableau t = read_input(args.input, in);
    std::vector<ScanColumnTrace> traces;
    const Tableau key = scanning_tableau(t, traces);
    if (args.explain) {
        explain_scan(traces, err);
    }
    out << format_tableau(key);
    if (!args.oracle) {
        return kOk;
    }
    SwapObserver observer;
    if (args.explain) {
        observer = [&err](const LengthSwapStep& step) { err << format_trace(step) << '\n'; };
    }
    const Tableau oracle = right_key_oracle(t, observer);
    out << '\n' << format_tableau(oracle) << '\n';
    if (oracle == key) {
        out << "AGREE\n";
        return kOk;
    }
    out << "DISAGREE\n";
    return kDisagreement;
}

int left_key_command(const KeyArgs& args, std::istream& in, std::ostream& out) {
    const Tableau t = read_input(args.input, in);
    const Tableau key = left_key(t);
    out << format_tableau(key);
    if (!args.oracle) {
        return kOk;
    }
    const Tableau oracle = left_key_oracle(t);
    out << '\n' << format_tableau(oracle) << '\n';
    if (oracle == key) {
        out << "AGREE\n";
        return kOk;
    }
    out << "DISAGREE\n";
    return kDisagreement;
}

int verify_command(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    CensusOptions options;
    options.max_boxes = args.max_boxes;
    options.max_entry = args.max_entry;
    options.jobs = args.jobs;
    options.check_swaps = args.check_swaps;

    const auto start = std::chrono::steady_clock::now();
    const CensusReport report = run_census(options);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    out << "shapes: " << report.shapes << '\n'
        << "tableaux: " << report.tableaux << '\n'
        << "keys: " << report.keys << '\n';
    if (args.check_swaps) {
        out << "length swaps: " << report.swaps << '\n';
    }
    for (const auto& [name, count] : report.failures) {
        if (count > 0) {
            out << "FAILED " << name << ": " << count << '\n';
        }
    }
    out << report.total_failures() << " counterexamples\n";
    err << "verify: " << elapsed.count() << " s\n";
    if (report.first_counterexample) {
        const auto& c = *report.first_counterexample;
        out << "first counterexample (" << c.check << "):\n"
            << format_tableau(c.tableau) << c.detail << '\n';
        return kCounterexample;
    }
    return kOk;
}

KeyEngine engine_of(const std::string& name) {
    return name == "oracle" ? KeyEngine::Oracle : KeyEngine::Scan;
}

SparsePolynomial run_engine(const std::string& engine, const DemazureArgs& args) {
    if (engine == "recursion") {
        return demazure_operator_recursion(args.mu, args.w, args.n);
    }
    return demazure_character(args.mu, args.w, args.n, engine_of(engine));
}

int demazure_command(const DemazureArgs& args, std::ostream& out) {
    if (!args.all_engines) {
        out << run_engine(args.engine, args).to_string();
        return kOk;
    }
    std::vector<SparsePolynomial> results;
    for (const char* engine : {"scan", "oracle", "recursion"}) {
        results.push_back(run_engine(engine, args));
        out << "engine " << engine << '\n' << results.back().to_string();
    }
    const bool agree = results[0] == results[1] && results[1] == results[2];
    out << (agree ? "ENGINES AGREE\n" : "ENGINES DISAGREE\n");
    return agree ? kOk : kDisagreement;
}

int enumerate_command(const EnumerateArgs& args, std::ostream& out) {
    TableauEnumerator stream(Shape(args.shape), args.n);
    bool first = true;
    while (auto t = stream.next()) {
        if (!first) {
            out << '\n';
        }
        first = false;
        out << format_tableau(*t);
    }
    return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Right and left keys of semistandard tableaux, and Demazure characters"};
    app.require_subcommand(1);

    KeyArgs right_args;
    auto* right = app.add_subcommand("right-key", "Right key of a tableau by scanning");
    right->add_option("input", right_args.input, "Tableau file (default: standard input)");
    right->add_flag("--explain", right_args.explain, "Print every EWIS pass to standard error");
    right->add_flag("--oracle", right_args.oracle,
                    "Also compute the key by jeu de taquin and compare");

    KeyArgs left_args;
    auto* left = app.add_subcommand("left-key", "Left key of a tableau by scanning");
    left->add_option("input", left_args.input, "Tableau file (default: standard input)");
    left->add_flag("--oracle", left_args.oracle,
                   "Also compute the key through complementation and compare");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Exhaustive comparison against the oracles");
    verify->add_option("--max-boxes", verify_args.max_boxes, "Largest number of boxes")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--max-entry", verify_args.max_entry, "Largest entry")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--jobs", verify_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--check-swaps", verify_args.check_swaps,
                     "Also check every length swap made by the oracle");

    DemazureArgs demazure_args;
    auto* demazure = app.add_subcommand("demazure", "Demazure character of mu and w");
    demazure->add_option("--mu", demazure_args.mu, "Partition, comma separated")
        ->required()
        ->delimiter(',');
    demazure->add_option("--w", demazure_args.w, "Permutation in one-line notation")
        ->required()
        ->delimiter(',');
    demazure->add_option("--n", demazure_args.n, "Number of variables")->required();
    auto* engine = demazure->add_option("--engine", demazure_args.engine, "scan|oracle|recursion")
                       ->check(CLI::IsMember({"scan", "oracle", "recursion"}));
    auto* all = demazure->add_flag("--all-engines", demazure_args.all_engines,
                                   "Run every engine and compare");
    engine->excludes(all);

    DemazureArgs schur_args;
    auto* schur = app.add_subcommand("schur", "Schur polynomial of mu in n variables");
    schur->add_option("--mu", schur_args.mu, "Partition, comma separated")
        ->required()
        ->delimiter(',');
    schur->add_option("--n", schur_args.n, "Number of variables")->required();

    EnumerateArgs enumerate_args;
    auto* enumerate = app.add_subcommand("enumerate", "List the tableaux of a shape");
    enumerate->add_option("--shape", enumerate_args.shape, "Column lengths, comma separated")
        ->required()
        ->delimiter(',');
    enumerate->add_option("--n", enumerate_args.n, "Largest entry")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*right) {
            return right_key_command(right_args, in, out, err);
        }
        if (*left) {
            return left_key_command(left_args, in, out);
        }
        if (*verify) {
            return verify_command(verify_args, out, err);
        }
        if (*demazure) {
            return demazure_command(demazure_args, out);
        }
        if (*schur) {
            out << schur_polynomial(schur_args.mu, schur_args.n).to_string();
            return kOk;
        }
        if (*enumerate) {
            return enumerate_command(enumerate_args, out);
        }
    } catch (const SyntaxError& e) {
        err << "syntax error: " << e.what() << '\n';
        return kBadInput;
    } catch (const TableauError& e) {
        err << "invalid tableau (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kBadInput;
    } catch (const DemazureError& e) {
        err << "bad input: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        err << "bad input: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}

} // namespace tabkey::cli
