#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncrat::selftest {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

/// Runs the full acceptance suite (worked-example reproductions and property
/// suites), printing one pass/fail line per criterion when `log` is given.
/// Everything is exact over Q and deterministic.
std::vector<CriterionResult> run_acceptance(std::ostream* log = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace ncrat::selftest
