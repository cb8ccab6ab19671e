#include "tabkey/census.hpp"

#include <atomic>
#include <algorithm>
#include <thread>
#include <vector>

#include "tabkey/enumerate.hpp"
#include "tabkey/jdt.hpp"
#include "tabkey/scanning.hpp"
#include "tabkey/text_io.hpp"

namespace tabkey {

const std::vector<std::string>& census_checks() {
    static const std::vector<std::string> names = {
        "right-key-matches-oracle",
        "left-key-matches-oracle",
        "right-key-is-key",
        "below-right-key",
        "left-key-is-key",
        "above-left-key",
        "keys-fixed",
        "equal-lengths-equal-columns",
        "fast-path-matches",
        "swap-frank-and-rectifies",
        "swap-bottom-entry-rule",
    };
    return names;
}

std::size_t CensusReport::total_failures() const {
    std::size_t total = 0;
    for (const auto& [name, count] : failures) {
        total += count;
    }
    return total;
}

namespace {

struct ShapeResult {
    std::size_t tableaux = 0;
    std::size_t keys = 0;
    std::size_t swaps = 0;
    std::map<std::string, std::size_t> failures;
    std::optional<Counterexample> first;

    void fail(const std::string& check, const Tableau& t, std::string detail) {
        ++failures[check];
        if (!first) {
            first = Counterexample{check, t, std::move(detail)};
        }
    }
};

void check_tableau(const Tableau& t, const CensusOptions& options, ShapeResult& result) {
    ++result.tableaux;

    SwapObserver observer;
    if (options.check_swaps) {
        observer = [&](const LengthSwapStep& step) {
            ++result.swaps;
            const std::size_t j = step.index;
            if (!verify_frank(step.after) || rectify(step.after) != t) {
                result.fail("swap-frank-and-rectifies", t, format_trace(step));
            }
            const Entry left = step.before.column(j).entries.back();
            const Entry right = step.before.column(j + 1).entries.back();
            const Entry expected = right >= left ? right : left;
            if (step.after.column(j + 1).entries.back() != expected) {
                result.fail("swap-bottom-entry-rule", t, format_trace(step));
            }
        };
    }

    const Tableau right = scanning_tableau(t);
    const Tableau right_oracle = right_key_oracle(t, observer);
    const Tableau left = left_key(t);
    const Tableau left_oracle = left_key_oracle(t);

    if (right != right_oracle) {
        result.fail("right-key-matches-oracle", t,
                    "scanning:\n" + format_tableau(right) + "oracle:\n" + format_tableau(right_oracle));
    }
    if (left != left_oracle) {
        result.fail("left-key-matches-oracle", t,
                    "scanning:\n" + format_tableau(left) + "oracle:\n" + format_tableau(left_oracle));
    }
    if (!is_key(right)) {
        result.fail("right-key-is-key", t, format_tableau(right));
    }
    if (!entrywise_leq(t, right)) {
        result.fail("below-right-key", t, format_tableau(right));
    }
    if (!is_key(left)) {
        result.fail("left-key-is-key", t, format_tableau(left));
    }
    if (!entrywise_leq(left, t)) {
        result.fail("above-left-key", t, format_tableau(left));
    }
    if (is_key(t)) {
        ++result.keys;
        if (right != t || left != t) {
            result.fail("keys-fixed", t,
                        "right:\n" + format_tableau(right) + "left:\n" + format_tableau(left));
        }
    }
    for (std::size_t c = 1; c < t.num_columns(); ++c) {
        if (t.column(c).size() == t.column(c - 1).size() && right.column(c) != right.column(c - 1)) {
            result.fail("equal-lengths-equal-columns", t, format_tableau(right));
            break;
        }
    }
    if (scanning_tableau(t, ScanOptions{true}) != right) {
        result.fail("fast-path-matches", t, format_tableau(right));
    }
}

} // namespace

CensusReport run_census(const CensusOptions& options) {
    CensusReport report;
    for (const auto& name : census_checks()) {
        report.failures[name] = 0;
    }
    if (options.max_boxes < 0 || options.max_entry < 1) {
        return report;
    }
    const auto shapes = shapes_up_to(options.max_boxes);
    std::vector<ShapeResult> results(shapes.size());
    std::atomic<std::size_t> next{0};

    const auto worker = [&] {
        for (std::size_t i = next++; i < shapes.size(); i = next++) {
            for_each_tableau(shapes[i], options.max_entry,
                             [&](const Tableau& t) { check_tableau(t, options, results[i]); });
        }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }

    report.shapes = shapes.size();
    for (auto& r : results) {
        report.tableaux += r.tableaux;
        report.keys += r.keys;
        report.swaps += r.swaps;
        for (const auto& [name, count] : r.failures) {
            report.failures[name] += count;
        }
        if (!report.first_counterexample && r.first) {
            report.first_counterexample = std::move(r.first);
        }
    }
    return report;
}

} // namespace tabkey
