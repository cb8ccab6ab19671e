#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "tabkey/enumerate.hpp"
#include "tabkey/scanning.hpp"
#include "tabkey/text_io.hpp"

using namespace tabkey;
using tabkey::testing::worked_example;
using tabkey::testing::worked_example_key;

namespace {

std::vector<std::vector<Entry>> pass_values(const ScanColumnTrace& trace) {
    std::vector<std::vector<Entry>> out;
    for (const auto& pass : trace.passes) {
        out.push_back(pass.values);
    }
    return out;
}

} // namespace

TEST(Ewis, Examples) {
    const std::vector<Entry> bottoms{8, 7, 9, 8, 9};
    const auto e = ewis(bottoms);
    EXPECT_EQ(e.values, (std::vector<Entry>{8, 9, 9}));
    EXPECT_EQ(e.indices, (std::vector<std::size_t>{0, 2, 4}));
    EXPECT_EQ(e.last_value(), 9);

    const std::vector<Entry> decreasing{5, 4, 3};
    EXPECT_EQ(ewis(decreasing).values, (std::vector<Entry>{5}));
    EXPECT_EQ(ewis(decreasing).indices, (std::vector<std::size_t>{0}));

    const std::vector<Entry> increasing{1, 1, 2};
    EXPECT_EQ(ewis(increasing).indices, (std::vector<std::size_t>{0, 1, 2}));

    EXPECT_THROW(ewis(std::vector<Entry>{}), std::invalid_argument);
}

TEST(Ewis, EarliestIndexInvariant) {
    auto rng = tabkey::testing::make_rng(2);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Entry> seq(1 + rng() % 10);
        for (auto& x : seq) x = 1 + static_cast<Entry>(rng() % 6);
        const auto e = ewis(seq);
        ASSERT_EQ(e.indices.front(), 0u);
        for (std::size_t j = 1; j < e.indices.size(); ++j) {
            // Nothing strictly between two chosen indices qualifies.
            for (std::size_t i = e.indices[j - 1] + 1; i < e.indices[j]; ++i) {
                EXPECT_LT(seq[i], e.values[j - 1]);
            }
            EXPECT_GE(e.values[j], e.values[j - 1]);
        }
        for (std::size_t i = e.indices.back() + 1; i < seq.size(); ++i) {
            EXPECT_LT(seq[i], e.last_value());
        }
    }
}

TEST(ScanColumn, WorkedExampleFirstColumn) {
    ScanColumnTrace trace;
    EXPECT_EQ(scan_column(worked_example(), 0, &trace), (Column{1, 4, 6, 7, 8, 9}));
    EXPECT_EQ(pass_values(trace),
              (std::vector<std::vector<Entry>>{
                  {8, 9, 9}, {7, 7, 8}, {5, 5, 6, 7}, {4, 5, 6}, {2, 3, 3, 4}, {1, 1}}));
}

TEST(ScanColumn, WorkedExampleLaterColumns) {
    ScanColumnTrace trace;
    EXPECT_EQ(scan_column(worked_example(), 2, &trace), (Column{6, 7, 8, 9}));
    EXPECT_EQ(pass_values(trace),
              (std::vector<std::vector<Entry>>{{9, 9}, {6, 8}, {5, 7}, {3, 4, 6}}));
    EXPECT_EQ(scan_column(worked_example(), 3, &trace), (Column{6, 7, 9}));
    EXPECT_EQ(pass_values(trace), (std::vector<std::vector<Entry>>{{8, 9}, {7}, {4, 6}}));
    // The last column is returned unchanged.
    EXPECT_EQ(scan_column(worked_example(), 4, &trace), (Column{6, 9}));
    EXPECT_EQ(pass_values(trace), (std::vector<std::vector<Entry>>{{9}, {6}}));
}

TEST(ScanColumn, EveryBoxMarkedOnce) {
    for (const Shape& shape : shapes_up_to(7)) {
        for_each_tableau(shape, 4, [&](const Tableau& t) {
            for (std::size_t s = 0; s < t.num_columns(); ++s) {
                ScanColumnTrace trace;
                scan_column(t, s, &trace);
                std::vector<std::vector<int>> marks;
                for (std::size_t c = s; c < t.num_columns(); ++c) {
                    marks.emplace_back(t.column(c).size(), 0);
                }
                for (const auto& pass : trace.passes) {
                    for (const auto& cell : pass.boxes) {
                        ++marks[static_cast<std::size_t>(cell.column) - s]
                               [static_cast<std::size_t>(cell.row)];
                    }
                }
                for (const auto& column : marks) {
                    for (int m : column) {
                        EXPECT_EQ(m, 1) << format_tableau(t) << "start " << s;
                    }
                }
            }
        });
    }
}

TEST(ScanningTableau, WorkedExample) {
    EXPECT_EQ(scanning_tableau(worked_example()), worked_example_key());
}

TEST(ScanningTableau, SingleColumnIsFixed) {
    const Tableau t({{2, 3, 7}}, 9);
    EXPECT_EQ(scanning_tableau(t), t);
    EXPECT_EQ(left_key(t), t);
}

TEST(ScanningTableau, EmptyTableau) {
    const Tableau t;
    EXPECT_TRUE(scanning_tableau(t).empty());
    EXPECT_TRUE(left_key(t).empty());
}

TEST(ScanningTableau, MatchesRecursiveDefinition) {
    for (const Shape& shape : shapes_up_to(7)) {
        for_each_tableau(shape, 4, [&](const Tableau& t) {
            EXPECT_EQ(scanning_tableau(t), tabkey::testing::recursive_scanning_tableau(t))
                << format_tableau(t);
        });
    }
    EXPECT_EQ(tabkey::testing::recursive_scanning_tableau(worked_example()), worked_example_key());
}

TEST(ScanningTableau, FastPathIsIdentical) {
    for (const Shape& shape : shapes_up_to(7)) {
        for_each_tableau(shape, 5, [&](const Tableau& t) {
            EXPECT_EQ(scanning_tableau(t, ScanOptions{true}), scanning_tableau(t));
        });
    }
}

TEST(ScanningTableau, KeyAboveTableau) {
    for (const Shape& shape : shapes_up_to(6)) {
        for_each_tableau(shape, 5, [&](const Tableau& t) {
            const Tableau s = scanning_tableau(t);
            EXPECT_EQ(s.shape(), t.shape());
            EXPECT_TRUE(is_key(s)) << format_tableau(t);
            EXPECT_TRUE(entrywise_leq(t, s)) << format_tableau(t);
            if (is_key(t)) {
                EXPECT_EQ(s, t);
            }
        });
    }
}

TEST(ScanningTableau, TraceCoversRequestedColumns) {
    std::vector<ScanColumnTrace> traces;
    scanning_tableau(worked_example(), traces);
    ASSERT_EQ(traces.size(), 5u);
    EXPECT_EQ(traces[0].passes.size(), 6u);
    scanning_tableau(worked_example(), traces, ScanOptions{true});
    // Columns 2 and 3 share a length; only the rightmost is scanned.
    EXPECT_EQ(traces.size(), 4u);
}

TEST(LeftScanSequence, Examples) {
    const Tableau first_two = Tableau({worked_example().column(0), worked_example().column(1)}, 9);
    EXPECT_EQ(left_scan_sequence(first_two, 1), (std::vector<Entry>{7, 7}));
    EXPECT_EQ(left_scan_sequence(worked_example(), 1), (std::vector<Entry>{7, 7}));

    EXPECT_EQ(left_scan_sequence(Tableau({{1, 4}}, 4), 0), (std::vector<Entry>{4}));
    EXPECT_EQ(left_scan_sequence(Tableau({{1, 3}, {1, 3}}, 4), 1), (std::vector<Entry>{3, 3}));

    // Walking from the bottom 9 of the last column of the worked example.
    EXPECT_EQ(left_scan_sequence(worked_example(), 4), (std::vector<Entry>{9, 8, 6, 5, 5}));
    const std::vector<int> alive{2, 1, 2, 3, 1};
    EXPECT_EQ(left_scan_sequence(worked_example(), 4, alive), (std::vector<Entry>{6, 4, 3, 1, 1}));
}

TEST(LeftKey, WorkedExample) {
    // Frozen from the complement-duality oracle; the last column (2,5) was
    // also checked by hand.
    const Tableau expected =
        parse_tableau("n=9\n1 1 1 1 2\n2 2 2 2 5\n4 5 5 5\n5 7 7\n7\n8\n");
    EXPECT_EQ(left_key(worked_example()), expected);
    EXPECT_EQ(left_key_oracle(worked_example()), expected);
}

TEST(LeftKey, KeyBelowTableau) {
    for (const Shape& shape : shapes_up_to(6)) {
        for_each_tableau(shape, 5, [&](const Tableau& t) {
            const Tableau l = left_key(t);
            EXPECT_EQ(l.shape(), t.shape());
            EXPECT_TRUE(is_key(l)) << format_tableau(t);
            EXPECT_TRUE(entrywise_leq(l, t)) << format_tableau(t);
            if (is_key(t)) {
                EXPECT_EQ(l, t);
            }
        });
    }
}
