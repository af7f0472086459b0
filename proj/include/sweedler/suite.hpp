#pragma once

#include <vector>

#include "sweedler/report.hpp"

namespace sweedler::suite {

/// One verification criterion of the built-in property suite. Every check is
/// an exact equality; there are no tolerances anywhere.
struct CriterionResult {
    std::string id;
    std::string title;
    Report details;
    bool pass() const { return details.all_pass(); }
};

struct Options {
    /// quick covers algebras of dimension <= 4; full adds the M_3 cases and
    /// the prime-field repetitions.
    bool full = false;
};

std::vector<CriterionResult> run(const Options& opts);

}  // namespace sweedler::suite
