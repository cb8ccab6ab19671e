#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "tabkey/tableau.hpp"

namespace tabkey {

/// Exhaustive sweep over every tableau with at most `max_boxes` boxes and
/// entries at most `max_entry`, comparing the scanning keys with the jeu de
/// taquin oracles.
struct CensusOptions {
    int max_boxes = 6;
    Entry max_entry = 4;
    unsigned jobs = 1;
    /// Check every length swap the oracle performs: the result is frank and
    /// rectifies to the input, and the new bottom entry follows the
    /// two-case rule. Roughly doubles the run time.
    bool check_swaps = false;
};

struct Counterexample {
    std::string check;
    Tableau tableau;
    std::string detail;
};

struct CensusReport {
    std::size_t shapes = 0;
    std::size_t tableaux = 0;
    std::size_t keys = 0;
    std::size_t swaps = 0;
    /// Number of failures per check name; checks that never failed are
    /// present with a zero count.
    std::map<std::string, std::size_t> failures;
    std::optional<Counterexample> first_counterexample;

    std::size_t total_failures() const;
    bool ok() const { return total_failures() == 0; }
};

/// Worker threads take whole shapes; the report does not depend on `jobs`.
CensusReport run_census(const CensusOptions& options);

/// The checks applied to each tableau, in report order.
const std::vector<std::string>& census_checks();

} // namespace tabkey
