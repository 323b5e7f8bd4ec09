#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dagbook {

/// A propositional formula in CNF. Literals use DIMACS conventions:
/// variables are 1-based, a negative literal negates its variable.
///
/// Formulas produced by encode() carry the variable map of the stack-layout
/// encoding: first the order variables for all vertex pairs u < v ("u
/// before v"), then page variables for every (edge, page).
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  int n = 0;      // vertices (0 when not a layout encoding)
  int m = 0;      // edges
  int pages = 0;  // page count of the encoding

  void add_clause(std::vector<int> lits);

  /// Literal asserting "u before v" (u != v).
  int order_literal(int u, int v) const;
  /// Variable for "edge e on page p".
  int page_variable(int e, int page) const;
};

/// DIMACS text ("p cnf <vars> <clauses>", zero-terminated clause lines).
void export_dimacs(const CnfFormula& f, std::ostream& out);
void export_dimacs_file(const CnfFormula& f, const std::string& path);
CnfFormula import_dimacs(std::istream& in);

/// Parses "v ..." model lines (literals terminated by 0). Throws on
/// malformed input or literals outside 1..num_vars.
std::vector<bool> import_model(std::istream& in, int num_vars);

}  // namespace dagbook
