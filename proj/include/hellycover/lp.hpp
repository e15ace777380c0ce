#pragma once

#include <cstdint>
#include <vector>

#include "hellycover/rational.hpp"

namespace hellycover {

struct LpResult {
    Rat value;
    std::vector<Rat> x;     // primal solution
    std::vector<Rat> dual;  // one multiplier per constraint
    std::uint64_t pivots = 0;
};

// maximize c.x subject to A x <= b, x >= 0, with b >= 0 (slack basis is
// feasible, no phase one). Dense tableau, Bland's rule, exact rationals.
LpResult simplex_max(const std::vector<std::vector<Rat>>& A,
                     const std::vector<Rat>& b, const std::vector<Rat>& c);

}  // namespace hellycover
