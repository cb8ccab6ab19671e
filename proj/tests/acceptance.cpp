// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails. Options: --seed=N for the randomized parts.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "tabkey/census.hpp"
#include "tabkey/demazure.hpp"
#include "tabkey/jdt.hpp"
#include "tabkey/scanning.hpp"
#include "tabkey/shape.hpp"
#include "tabkey/text_io.hpp"

using namespace tabkey;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_seconds(double s) {
    std::ostringstream out;
    out.precision(3);
    if (s < 1.0) {
        out << s * 1000.0 << " ms";
    } else {
        out << s << " s";
    }
    return out.str();
}

std::size_t failures_of(const CensusReport& report, const std::vector<std::string>& checks,
                        std::string& detail) {
    std::size_t total = 0;
    for (const auto& name : checks) {
        const auto it = report.failures.find(name);
        if (it != report.failures.end() && it->second > 0) {
            total += it->second;
            detail += " " + name + "=" + std::to_string(it->second);
        }
    }
    return total;
}

Outcome worked_example_golden(double& elapsed) {
    Outcome o;
    const Tableau t = testing::worked_example();
    const Tableau expected = testing::worked_example_key();

    constexpr int kRuns = 100;
    std::vector<ScanColumnTrace> trace;
    Tableau key;
    const auto start = Clock::now();
    for (int i = 0; i < kRuns; ++i) {
        trace.clear();
        key = scanning_tableau(t, trace);
    }
    elapsed = seconds_since(start) / kRuns;

    if (key != expected) {
        o.pass = false;
        o.detail = "key mismatch:\n" + format_tableau(key);
        return o;
    }
    const std::vector<std::string> passes = {"(8,9,9)",   "(7,7,8)", "(5,5,6,7)",
                                             "(4,5,6)",   "(2,3,3,4)", "(1,1)"};
    std::vector<std::string> got;
    for (const auto& column : trace) {
        if (column.start_column != 0) continue;
        for (const auto& pass : column.passes) got.push_back(format_sequence(pass.values));
    }
    if (got != passes) {
        o.pass = false;
        o.detail = "column 1 passes differ:";
        for (const auto& g : got) o.detail += " " + g;
        return o;
    }
    if (elapsed >= 1e-3) {
        o.pass = false;
        o.detail = "too slow";
    }
    o.detail = "key and six passes match" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome jdt_soundness(const CensusReport& report, std::size_t& cases) {
    Outcome o;
    std::size_t confluence = 0, round_trips = 0, mismatches = 0;
    auto rng = testing::make_rng(101);
    auto picker_rng = testing::make_rng(102);
    const CornerPicker rightmost = [](const std::vector<Cell>& c) { return c.size() - 1; };
    const CornerPicker random = [&](const std::vector<Cell>& c) {
        return std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(picker_rng);
    };
    constexpr int kTrials = 2000;
    for (int trial = 0; trial < kTrials; ++trial) {
        const SkewTableau u = testing::random_skew_tableau(rng, 8, 6);
        const Tableau leftmost = rectify(u);
        ++confluence;
        if (rectify(u, rightmost) != leftmost || rectify(u, random) != leftmost) {
            ++mismatches;
            if (o.detail.empty()) o.detail = "confluence fails on\n" + u.to_string();
        }
        for (const Cell& corner : inside_corners(u)) {
            if (!u.is_box(corner.column, corner.row + 1) &&
                !u.is_box(corner.column + 1, corner.row)) {
                continue;
            }
            const auto forward = forward_slide(u, corner);
            const auto back = reverse_slide(forward.tableau, forward.trace.end());
            ++round_trips;
            if (back.tableau != u) {
                ++mismatches;
                if (o.detail.empty()) o.detail = "forward round trip fails on\n" + u.to_string();
            }
        }
        for (const Cell& corner : testing::outside_corners(u)) {
            const auto reverse = reverse_slide(u, corner);
            const auto back = forward_slide(reverse.tableau, reverse.trace.end());
            ++round_trips;
            if (back.tableau != u) {
                ++mismatches;
                if (o.detail.empty()) o.detail = "reverse round trip fails on\n" + u.to_string();
            }
        }
    }
    std::string census_detail;
    const std::size_t swap_failures = failures_of(
        report, {"swap-frank-and-rectifies", "swap-bottom-entry-rule"}, census_detail);
    cases = confluence;
    o.pass = mismatches == 0 && swap_failures == 0 && report.swaps > 0;
    std::ostringstream summary;
    summary << confluence << " skew tableaux x 3 corner orders, " << round_trips
            << " slide round trips, " << report.swaps << " length swaps checked, "
            << mismatches + swap_failures << " failures" << census_detail;
    o.detail = summary.str() + (o.detail.empty() ? "" : "\n" + o.detail);
    return o;
}

Outcome uniqueness() {
    Outcome o;
    std::ostringstream summary;
    std::size_t exceptions = 0;
    for (bool separated : {false, true}) {
        std::size_t pairs = 0;
        const std::size_t bad = testing::uniqueness_exceptions(6, 6, separated, pairs);
        exceptions += bad;
        summary << (separated ? "; separated: " : "tight: ") << pairs << " pairs, " << bad
                << " exceptions";
        if (pairs == 0) o.pass = false;
    }
    o.pass = o.pass && exceptions == 0;
    o.detail = summary.str();
    return o;
}

Outcome demazure_cross() {
    Outcome o;
    constexpr int n = 4;
    std::vector<std::vector<int>> partitions;
    for (const Shape& s : shapes_up_to(5)) {
        auto rows = s.row_lengths();
        if (static_cast<int>(rows.size()) <= n) partitions.push_back(rows);
    }
    Permutation w = {1, 2, 3, 4};
    std::size_t comparisons = 0, mismatches = 0;
    do {
        for (const auto& mu : partitions) {
            ++comparisons;
            const auto lhs = demazure_character(mu, w, n);
            const auto rhs = demazure_operator_recursion(mu, w, n);
            if (lhs != rhs) {
                ++mismatches;
                if (o.detail.empty()) {
                    o.detail = "\nmismatch at mu=" + format_sequence(mu) +
                               " w=" + format_sequence(w);
                }
            }
        }
    } while (std::next_permutation(w.begin(), w.end()));
    for (const auto& mu : partitions) {
        ++comparisons;
        if (demazure_character(mu, longest_permutation(n), n) != schur_polynomial(mu, n)) {
            ++mismatches;
            if (o.detail.empty()) o.detail = "\nw0 differs from Schur at mu=" + format_sequence(mu);
        }
    }
    o.pass = mismatches == 0;
    o.detail = std::to_string(comparisons) + " polynomial comparisons over " +
               std::to_string(partitions.size()) + " partitions, " +
               std::to_string(mismatches) + " mismatches" + o.detail;
    return o;
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (std::strncmp(argv[i], "--seed=", 7) == 0) {
            testing::set_test_seed(std::strtoull(argv[i] + 7, nullptr, 10));
        } else {
            std::cerr << "usage: acceptance [--seed=N]\n";
            return 2;
        }
    }
    std::cout << "seed: " << testing::test_seed() << '\n';

    int failed = 0;
    auto report_line = [&](int number, const std::string& name, const Outcome& o,
                           double elapsed, double budget) {
        const bool in_budget = elapsed < budget;
        const bool pass = o.pass && in_budget;
        if (!pass) ++failed;
        std::cout << (pass ? "PASS" : "FAIL") << "  " << number << ". " << name << ": "
                  << o.detail << " [" << format_seconds(elapsed) << ", budget "
                  << format_seconds(budget) << (in_budget ? "" : ", OVER BUDGET") << "]"
                  << std::endl;
    };

    {
        double elapsed = 0;
        const Outcome o = worked_example_golden(elapsed);
        report_line(1, "worked example golden key and trace", o, elapsed, 1e-3);
    }

    CensusOptions options;
    options.max_boxes = 8;
    options.max_entry = 5;
    options.jobs = 1;
    options.check_swaps = true;
    const auto census_start = Clock::now();
    const CensusReport report = run_census(options);
    const double census_elapsed = seconds_since(census_start);
    const std::string census_size = std::to_string(report.shapes) + " shapes, " +
                                    std::to_string(report.tableaux) + " tableaux";

    {
        Outcome o;
        std::string detail;
        const auto bad =
            failures_of(report, {"right-key-matches-oracle", "fast-path-matches"}, detail);
        o.pass = bad == 0 && report.tableaux > 0;
        o.detail = census_size + ", " + std::to_string(bad) + " counterexamples" + detail;
        if (!o.pass && report.first_counterexample) {
            o.detail += "\n" + format_tableau(report.first_counterexample->tableau);
        }
        report_line(2, "scanning equals swap oracle", o, census_elapsed, 60.0);
    }
    {
        Outcome o;
        std::string detail;
        const auto bad = failures_of(report,
                                     {"right-key-is-key", "below-right-key", "left-key-is-key",
                                      "above-left-key", "keys-fixed",
                                      "equal-lengths-equal-columns"},
                                     detail);
        o.pass = bad == 0 && report.keys > 0;
        o.detail = census_size + ", " + std::to_string(report.keys) + " keys, " +
                   std::to_string(bad) + " failures" + detail;
        report_line(3, "key and order properties", o, census_elapsed, 60.0);
    }
    {
        Outcome o;
        std::string detail;
        const auto bad = failures_of(report, {"left-key-matches-oracle"}, detail);
        o.pass = bad == 0 && report.tableaux > 0;
        o.detail = census_size + ", " + std::to_string(bad) + " disagreements" + detail;
        report_line(4, "left key equals complement oracle", o, census_elapsed, 60.0);
    }
    {
        const auto start = Clock::now();
        std::size_t cases = 0;
        Outcome o = jdt_soundness(report, cases);
        if (cases < 1000) o.pass = false;
        report_line(5, "jeu de taquin soundness", o, seconds_since(start), 60.0);
    }
    {
        const auto start = Clock::now();
        const Outcome o = uniqueness();
        report_line(6, "skew rectification uniqueness", o, seconds_since(start), 300.0);
    }
    {
        const auto start = Clock::now();
        const Outcome o = demazure_cross();
        report_line(7, "demazure character cross-check", o, seconds_since(start), 120.0);
    }

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
