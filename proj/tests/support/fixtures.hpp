#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "tabkey/tableau.hpp"
#include "tabkey/text_io.hpp"

namespace tabkey::testing {

inline const std::string kWorkedExampleText = "1 1 3 4 6\n2 3 5 7 9\n4 5 6 8\n5 7 9\n7\n8\n";
inline const std::string kWorkedExampleKeyText = "1 6 6 6 6\n4 7 7 7 9\n6 8 8 9\n7 9 9\n8\n9\n";

inline Tableau worked_example() { return parse_tableau(kWorkedExampleText); }
inline Tableau worked_example_key() { return parse_tableau(kWorkedExampleKeyText); }

/// Seed for randomized tests; set with --seed=N on the test command line.
std::uint64_t test_seed();
void set_test_seed(std::uint64_t seed);

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
    return std::mt19937_64(test_seed() ^ (salt * 0x9E3779B97F4A7C15ULL));
}

} // namespace tabkey::testing
