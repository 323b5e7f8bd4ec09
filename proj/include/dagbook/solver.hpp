#pragma once

#include <cstdint>
#include <vector>

#include "dagbook/cnf.hpp"

namespace dagbook {

enum class SolveStatus { Sat, Unsat, Unknown };

struct SolverBudget {
  std::int64_t max_conflicts = -1;  // negative = unlimited
};

struct ModelResult {
  SolveStatus status = SolveStatus::Unknown;
  std::vector<bool> model;  // indexed by variable - 1, valid when Sat
  std::int64_t conflicts = 0;
};

/// Solves f with the built-in CDCL solver (two-watched literals, first-UIP
/// learning, activity-based decisions, Luby restarts).
ModelResult solve_cnf(const CnfFormula& f, const SolverBudget& budget = {});

}  // namespace dagbook
