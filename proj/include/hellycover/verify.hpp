#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hellycover {

enum class Suite { fast, full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the acceptance checklist (15 criteria). The full suite runs every
// check at its stated size; fast trims instance counts for quick iteration.
// One "PASS criterion-NN ..." / "FAIL criterion-NN ..." line per criterion
// goes to `progress` when given.
std::vector<CriterionResult> run_acceptance(Suite suite, std::ostream* progress);

std::string junit_xml(const std::vector<CriterionResult>& results);

}  // namespace hellycover
