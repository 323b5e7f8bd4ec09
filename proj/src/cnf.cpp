#include "dagbook/cnf.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dagbook {

void CnfFormula::add_clause(std::vector<int> lits) {
  if (lits.empty()) throw std::invalid_argument("empty clause");
  for (int lit : lits) {
    int var = std::abs(lit);
    if (var < 1 || var > num_vars) throw std::invalid_argument("undeclared variable");
  }
  clauses.push_back(std::move(lits));
}

int CnfFormula::order_literal(int u, int v) const {
  bool positive = u < v;
  if (!positive) std::swap(u, v);
  // triangular index of pair (u, v) with u < v
  int id = u * n - u * (u + 1) / 2 + (v - u - 1) + 1;
  return positive ? id : -id;
}

int CnfFormula::page_variable(int e, int page) const {
  return n * (n - 1) / 2 + e * pages + page + 1;
}

void export_dimacs(const CnfFormula& f, std::ostream& out) {
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << " ";
    out << "0\n";
  }
}

void export_dimacs_file(const CnfFormula& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  export_dimacs(f, out);
}

CnfFormula import_dimacs(std::istream& in) {
  CnfFormula f;
  std::string line;
  bool header_seen = false;
  size_t expected_clauses = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream tokens(line);
    if (!header_seen) {
      std::string p, cnf;
      if (!(tokens >> p >> cnf >> f.num_vars >> expected_clauses) || p != "p" ||
          cnf != "cnf") {
        throw std::runtime_error("bad DIMACS header");
      }
      header_seen = true;
      continue;
    }
    std::vector<int> clause;
    int lit;
    while (tokens >> lit) {
      if (lit == 0) break;
      clause.push_back(lit);
    }
    if (!clause.empty()) f.add_clause(std::move(clause));
  }
  if (!header_seen) throw std::runtime_error("missing DIMACS header");
  if (f.clauses.size() != expected_clauses) {
    throw std::runtime_error("clause count does not match header");
  }
  return f;
}

std::vector<bool> import_model(std::istream& in, int num_vars) {
  std::vector<bool> model(num_vars, false);
  std::vector<bool> seen(num_vars, false);
  std::string line;
  bool done = false;
  while (!done && std::getline(in, line)) {
    if (line.empty() || line[0] != 'v') continue;
    std::istringstream tokens(line.substr(1));
    int lit;
    while (tokens >> lit) {
      if (lit == 0) {
        done = true;
        break;
      }
      int var = std::abs(lit);
      if (var < 1 || var > num_vars) {
        throw std::runtime_error("model literal outside declared variables");
      }
      model[var - 1] = lit > 0;
      seen[var - 1] = true;
    }
  }
  if (!done) throw std::runtime_error("model lines not terminated by 0");
  return model;
}

}  // namespace dagbook
