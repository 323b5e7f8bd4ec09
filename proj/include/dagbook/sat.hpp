#pragma once

#include <optional>
#include <string>

#include "dagbook/cnf.hpp"
#include "dagbook/dag.hpp"
#include "dagbook/layout.hpp"
#include "dagbook/order.hpp"
#include "dagbook/solver.hpp"

namespace dagbook {

struct EncodeOptions {
  /// Restrict edge j to pages 0..j. Never changes the verdict; on by
  /// default, switchable for the equivalence tests.
  bool page_symmetry_breaking = true;
};

/// CNF for "g admits a layout on the given number of pages with the order a
/// linear extension". Variables: order(u,v) for all pairs u < v, then
/// page(e,i); clauses: transitivity over all triples, one unit per edge,
/// at-least-one page per edge, and two crossing-exclusion clauses (one per
/// direction-aware interleaving pattern) per independent edge pair and
/// page. Throws std::invalid_argument when pages < 1.
CnfFormula encode(const Dag& g, int pages, const EncodeOptions& options = {});

/// encode() plus a unit clause per order variable fixing sigma.
CnfFormula encode_fixed_order(const Dag& g, const LinearOrder& sigma, int pages,
                              const EncodeOptions& options = {});

struct SolverConfig {
  std::string external_command;  // empty = built-in solver
  std::int64_t max_conflicts = -1;
  std::string dimacs_dir;  // when set, formulas are also written here
  EncodeOptions encode_options;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::vector<bool> model;
  std::optional<StackLayout> decoded;
};

/// Recovers the layout from a model of f: vertex position = number of
/// other vertices ordered before it, page = lowest true page variable.
StackLayout decode_model(const Dag& g, const CnfFormula& f,
                         const std::vector<bool>& model);

/// Solves f (built-in solver, or the external command via DIMACS files when
/// configured) and decodes sat models. The decoded layout is validated;
/// an invalid decode throws std::logic_error.
SolveResult solve_layout(const Dag& g, const CnfFormula& f,
                         const SolverConfig& config = {});

struct StackNumberResult {
  enum class Status { Found, ExceedsMax, Unknown };
  Status status = Status::Unknown;
  int k = 0;
  StackLayout layout;
};

/// Exact stack number by increasing k until sat (unsat answers at smaller k
/// certify minimality).
StackNumberResult stack_number(const Dag& g, int k_max,
                               const SolverConfig& config = {});

/// Exact page count for the fixed order sigma.
StackNumberResult stack_number_fixed_order(const Dag& g, const LinearOrder& sigma,
                                           int k_max,
                                           const SolverConfig& config = {});

/// Ground truth by enumerating all linear extensions and exactly coloring
/// each crossing graph. Intended for n <= 8.
int brute_force_stack_number(const Dag& g);

/// Linear extensions of g in lexicographic order (by vertex id at each
/// step), at most cap of them (cap < 0 = all).
std::vector<LinearOrder> all_linear_extensions(const Dag& g, long long cap = -1);
long long count_linear_extensions(const Dag& g, long long cap = -1);

}  // namespace dagbook
