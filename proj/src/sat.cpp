#include "dagbook/sat.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dagbook/pages.hpp"
#include "dagbook/twist.hpp"

namespace dagbook {

namespace {

bool independent(const Edge& e, const Edge& f) {
  return e.source != f.source && e.source != f.target && e.target != f.source &&
         e.target != f.target;
}

}  // namespace

CnfFormula encode(const Dag& g, int pages, const EncodeOptions& options) {
  if (pages < 1) throw std::invalid_argument("page count must be at least 1");
  CnfFormula f;
  f.n = g.n;
  f.m = g.edge_count();
  f.pages = pages;
  f.num_vars = g.n * (g.n - 1) / 2 + g.edge_count() * pages;

  // transitivity of the order relation
  for (int i = 0; i < g.n; i++) {
    for (int j = i + 1; j < g.n; j++) {
      for (int k = j + 1; k < g.n; k++) {
        int ij = f.order_literal(i, j);
        int jk = f.order_literal(j, k);
        int ik = f.order_literal(i, k);
        f.add_clause({-ij, -jk, ik});
        f.add_clause({ij, jk, -ik});
      }
    }
  }

  // the order must be a linear extension
  for (const Edge& e : g.edges) {
    f.add_clause({f.order_literal(e.source, e.target)});
  }

  // every edge on at least one page
  for (int e = 0; e < g.edge_count(); e++) {
    std::vector<int> clause;
    for (int p = 0; p < pages; p++) clause.push_back(f.page_variable(e, p));
    f.add_clause(std::move(clause));
  }

  // same-page edges must not interleave, one clause per crossing pattern
  for (int e = 0; e < g.edge_count(); e++) {
    for (int h = e + 1; h < g.edge_count(); h++) {
      if (!independent(g.edges[e], g.edges[h])) continue;
      int a = g.edges[e].source, b = g.edges[e].target;
      int c = g.edges[h].source, d = g.edges[h].target;
      for (int p = 0; p < pages; p++) {
        int pe = f.page_variable(e, p), ph = f.page_variable(h, p);
        f.add_clause({-f.order_literal(a, c), -f.order_literal(c, b),
                      -f.order_literal(b, d), -pe, -ph});
        f.add_clause({-f.order_literal(c, a), -f.order_literal(a, d),
                      -f.order_literal(d, b), -pe, -ph});
      }
    }
  }

  if (options.page_symmetry_breaking) {
    for (int e = 0; e < g.edge_count() && e < pages; e++) {
      for (int p = e + 1; p < pages; p++) {
        f.add_clause({-f.page_variable(e, p)});
      }
    }
  }
  return f;
}

CnfFormula encode_fixed_order(const Dag& g, const LinearOrder& sigma, int pages,
                              const EncodeOptions& options) {
  if (!is_linear_extension(g, sigma)) {
    throw std::invalid_argument("order is not a linear extension of the graph");
  }
  CnfFormula f = encode(g, pages, options);
  for (int u = 0; u < g.n; u++) {
    for (int v = u + 1; v < g.n; v++) {
      int lit = f.order_literal(u, v);
      f.add_clause({sigma.pos(u) < sigma.pos(v) ? lit : -lit});
    }
  }
  return f;
}

StackLayout decode_model(const Dag& g, const CnfFormula& f,
                         const std::vector<bool>& model) {
  if (static_cast<int>(model.size()) < f.num_vars) {
    throw std::invalid_argument("model smaller than the formula");
  }
  auto before = [&](int u, int v) {
    int lit = f.order_literal(u, v);
    bool value = model[std::abs(lit) - 1];
    return lit > 0 ? value : !value;
  };
  StackLayout layout;
  layout.order.position.assign(g.n, 0);
  for (int u = 0; u < g.n; u++) {
    for (int v = 0; v < g.n; v++) {
      if (u != v && before(v, u)) layout.order.position[u]++;
    }
  }
  layout.page_of.assign(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); e++) {
    for (int p = 0; p < f.pages; p++) {
      if (model[f.page_variable(e, p) - 1]) {
        layout.page_of[e] = p;
        break;
      }
    }
  }
  layout.pages = f.pages;
  return layout;
}

namespace {

// Runs "<command> <cnf path>" and parses the s/v answer lines.
ModelResult run_external_solver(const CnfFormula& f, const std::string& command) {
  namespace fs = std::filesystem;
  static int counter = 0;
  fs::path path = fs::temp_directory_path() /
                  ("dagbook_" + std::to_string(::getpid()) + "_" +
                   std::to_string(counter++) + ".cnf");
  export_dimacs_file(f, path.string());

  std::string cmdline = command + " " + path.string();
  FILE* pipe = popen(cmdline.c_str(), "r");
  if (!pipe) {
    fs::remove(path);
    throw std::runtime_error("cannot run external solver: " + command);
  }
  std::string output;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    output.append(buffer, got);
  }
  pclose(pipe);
  fs::remove(path);

  ModelResult result;
  std::istringstream lines(output);
  std::string line;
  bool answered = false;
  while (std::getline(lines, line)) {
    if (line.rfind("s SATISFIABLE", 0) == 0) {
      result.status = SolveStatus::Sat;
      answered = true;
    } else if (line.rfind("s UNSATISFIABLE", 0) == 0) {
      result.status = SolveStatus::Unsat;
      answered = true;
    }
  }
  if (!answered) {
    throw std::runtime_error("external solver gave no answer line: " + command);
  }
  if (result.status == SolveStatus::Sat) {
    std::istringstream again(output);
    result.model = import_model(again, f.num_vars);
  }
  return result;
}

}  // namespace

SolveResult solve_layout(const Dag& g, const CnfFormula& f, const SolverConfig& config) {
  ModelResult raw;
  if (config.external_command.empty()) {
    raw = solve_cnf(f, {config.max_conflicts});
  } else {
    raw = run_external_solver(f, config.external_command);
  }
  SolveResult result;
  result.status = raw.status;
  if (raw.status == SolveStatus::Sat) {
    result.model = raw.model;
    StackLayout layout = decode_model(g, f, raw.model);
    LayoutValidation validation = validate_layout(g, layout);
    if (!validation.ok) {
      throw std::logic_error("decoded layout invalid: " + validation.message);
    }
    result.decoded = std::move(layout);
  }
  return result;
}

namespace {

StackNumberResult stack_number_impl(const Dag& g,
                                    const std::optional<LinearOrder>& fixed, int k_max,
                                    const SolverConfig& config) {
  StackNumberResult result;
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  if (g.edge_count() == 0) {
    result.status = StackNumberResult::Status::Found;
    result.k = g.n > 0 ? 1 : 0;
    result.layout.order =
        fixed ? *fixed : LinearOrder::from_sequence(topological_order(g));
    result.layout.pages = result.k;
    return result;
  }
  for (int k = 1; k <= k_max; k++) {
    CnfFormula f = fixed ? encode_fixed_order(g, *fixed, k, config.encode_options)
                         : encode(g, k, config.encode_options);
    if (!config.dimacs_dir.empty()) {
      std::filesystem::create_directories(config.dimacs_dir);
      export_dimacs_file(
          f, (std::filesystem::path(config.dimacs_dir) / ("k" + std::to_string(k) + ".cnf"))
                 .string());
    }
    SolveResult solved = solve_layout(g, f, config);
    if (solved.status == SolveStatus::Sat) {
      result.status = StackNumberResult::Status::Found;
      result.k = k;
      result.layout = *solved.decoded;
      return result;
    }
    if (solved.status == SolveStatus::Unknown) {
      result.status = StackNumberResult::Status::Unknown;
      result.k = k;
      return result;
    }
  }
  result.status = StackNumberResult::Status::ExceedsMax;
  result.k = k_max;
  return result;
}

}  // namespace

StackNumberResult stack_number(const Dag& g, int k_max, const SolverConfig& config) {
  return stack_number_impl(g, std::nullopt, k_max, config);
}

StackNumberResult stack_number_fixed_order(const Dag& g, const LinearOrder& sigma,
                                           int k_max, const SolverConfig& config) {
  return stack_number_impl(g, sigma, k_max, config);
}

namespace {

void extend_linear_extensions(const Dag& g, std::vector<std::vector<int>>& adj,
                              std::vector<int>& indeg, std::vector<int>& prefix,
                              std::vector<LinearOrder>& out, long long cap) {
  if (cap >= 0 && static_cast<long long>(out.size()) >= cap) return;
  if (static_cast<int>(prefix.size()) == g.n) {
    out.push_back(LinearOrder::from_sequence(prefix));
    return;
  }
  for (int v = 0; v < g.n; v++) {
    if (indeg[v] != 0) continue;
    indeg[v] = -1;  // placed
    for (int w : adj[v]) indeg[w]--;
    prefix.push_back(v);
    extend_linear_extensions(g, adj, indeg, prefix, out, cap);
    prefix.pop_back();
    for (int w : adj[v]) indeg[w]++;
    indeg[v] = 0;
    if (cap >= 0 && static_cast<long long>(out.size()) >= cap) return;
  }
}

}  // namespace

std::vector<LinearOrder> all_linear_extensions(const Dag& g, long long cap) {
  std::vector<std::vector<int>> adj = g.out_adjacency();
  std::vector<int> indeg(g.n, 0);
  for (const Edge& e : g.edges) indeg[e.target]++;
  std::vector<int> prefix;
  std::vector<LinearOrder> out;
  extend_linear_extensions(g, adj, indeg, prefix, out, cap);
  return out;
}

long long count_linear_extensions(const Dag& g, long long cap) {
  return static_cast<long long>(all_linear_extensions(g, cap).size());
}

int brute_force_stack_number(const Dag& g) {
  if (g.n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  int best = g.edge_count();
  for (const LinearOrder& sigma : all_linear_extensions(g)) {
    if (best == 1) break;
    if (max_twist(g, sigma).k() >= best) continue;
    if (auto layout = min_pages_for_order(g, sigma, best - 1)) {
      best = layout->pages;
    }
  }
  return best;
}

}  // namespace dagbook
