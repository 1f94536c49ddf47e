#pragma once

#include <vector>

#include <gmpxx.h>

namespace corelab {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    mpq_class value;
    std::vector<mpq_class> x;
};

// Exact two-phase simplex with Bland's rule:
//   maximize c·x  subject to  A x = b, x >= 0.
// Dense and meant for a few dozen rows and columns.
LpResult solve_lp(std::vector<std::vector<mpq_class>> A, std::vector<mpq_class> b, std::vector<mpq_class> c);

} // namespace corelab
