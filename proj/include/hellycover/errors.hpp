#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hellycover {

// Bad caller input (out-of-range vertex, missing partition, malformed file).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A solver or enumeration ran out of its configured budget. Carries the best
// bounds established so far, so callers can still report partial information.
struct budget_error : std::runtime_error {
    std::string stage;
    long long best_lower = -1;
    long long best_upper = -1;

    budget_error(std::string stage_, const std::string& what,
                 long long lower = -1, long long upper = -1)
        : std::runtime_error(what), stage(std::move(stage_)),
          best_lower(lower), best_upper(upper) {}
};

// An internal consistency check failed. Raised e.g. when a pipeline whose
// success is mathematically guaranteed under its precondition fails anyway;
// such an instance would be a counterexample worth keeping.
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hellycover
