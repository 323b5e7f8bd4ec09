#include "dagbook/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dagbook {

namespace {

// literal encoding: 2*var for positive, 2*var+1 for negative (vars 0-based)
inline int lit_of(int dimacs) {
  int var = std::abs(dimacs) - 1;
  return dimacs > 0 ? 2 * var : 2 * var + 1;
}
inline int neg(int lit) { return lit ^ 1; }
inline int var_of(int lit) { return lit >> 1; }
inline bool sign_of(int lit) { return (lit & 1) == 0; }  // true = positive

constexpr char kUndef = -1;

struct Watch {
  int clause = -1;
  int blocker = -1;
};

int luby(int i) {
  // Luby sequence index i >= 1
  for (int k = 1; k < 32; k++) {
    if (i == (1 << k) - 1) return 1 << (k - 1);
  }
  int k = 1;
  while ((1 << k) - 1 < i) k++;
  return luby(i - (1 << (k - 1)) + 1);
}

class Cdcl {
 public:
  explicit Cdcl(const CnfFormula& f) : num_vars_(f.num_vars) {
    assign_.assign(num_vars_, kUndef);
    reason_.assign(num_vars_, -1);
    level_.assign(num_vars_, 0);
    activity_.assign(num_vars_, 0.0);
    phase_.assign(num_vars_, false);
    seen_.assign(num_vars_, false);
    watches_.assign(2 * num_vars_, {});
    trail_.reserve(num_vars_);

    for (const auto& clause : f.clauses) {
      std::vector<int> lits;
      lits.reserve(clause.size());
      bool tautology = false;
      for (int dimacs : clause) {
        int lit = lit_of(dimacs);
        if (std::find(lits.begin(), lits.end(), lit) != lits.end()) continue;
        if (std::find(lits.begin(), lits.end(), neg(lit)) != lits.end()) {
          tautology = true;
          break;
        }
        lits.push_back(lit);
      }
      if (tautology) continue;
      if (lits.size() == 1) {
        units_.push_back(lits[0]);
      } else {
        add_clause(std::move(lits));
      }
    }
  }

  ModelResult solve(const SolverBudget& budget) {
    ModelResult result;
    for (int lit : units_) {
      char value = value_of(lit);
      if (value == 0) {  // conflicting units
        result.status = SolveStatus::Unsat;
        return result;
      }
      if (value == kUndef) enqueue(lit, -1);
    }
    if (propagate() != -1) {
      result.status = SolveStatus::Unsat;
      return result;
    }

    std::int64_t conflicts = 0;
    int restart = 1;
    std::int64_t next_restart = 100LL * luby(restart);

    while (true) {
      int conflict = propagate();
      if (conflict != -1) {
        conflicts++;
        if (decision_level() == 0) {
          result.status = SolveStatus::Unsat;
          result.conflicts = conflicts;
          return result;
        }
        std::vector<int> learned;
        int backtrack = analyze(conflict, learned);
        cancel_until(backtrack);
        if (learned.size() == 1) {
          enqueue(learned[0], -1);
        } else {
          int idx = add_clause(std::move(learned));
          enqueue(clauses_[idx][0], idx);
        }
        decay_activities();
        if (budget.max_conflicts >= 0 && conflicts >= budget.max_conflicts) {
          result.status = SolveStatus::Unknown;
          result.conflicts = conflicts;
          return result;
        }
        if (conflicts >= next_restart) {
          restart++;
          next_restart = conflicts + 100LL * luby(restart);
          cancel_until(0);
        }
        continue;
      }

      int decision = pick_branch();
      if (decision == -1) {
        result.status = SolveStatus::Sat;
        result.conflicts = conflicts;
        result.model.assign(num_vars_, false);
        for (int v = 0; v < num_vars_; v++) result.model[v] = assign_[v] == 1;
        return result;
      }
      trail_limits_.push_back(static_cast<int>(trail_.size()));
      enqueue(decision, -1);
    }
  }

 private:
  char value_of(int lit) const {
    char a = assign_[var_of(lit)];
    if (a == kUndef) return kUndef;
    return (a == 1) == sign_of(lit) ? 1 : 0;
  }

  int decision_level() const { return static_cast<int>(trail_limits_.size()); }

  int add_clause(std::vector<int> lits) {
    int idx = static_cast<int>(clauses_.size());
    watches_[neg(lits[0])].push_back({idx, lits[1]});
    watches_[neg(lits[1])].push_back({idx, lits[0]});
    clauses_.push_back(std::move(lits));
    return idx;
  }

  void enqueue(int lit, int reason) {
    int v = var_of(lit);
    assign_[v] = sign_of(lit) ? 1 : 0;
    reason_[v] = reason;
    level_[v] = decision_level();
    trail_.push_back(lit);
  }

  // Returns the index of a conflicting clause, or -1.
  int propagate() {
    while (head_ < trail_.size()) {
      int lit = trail_[head_++];
      auto& watch_list = watches_[lit];
      size_t keep = 0;
      for (size_t i = 0; i < watch_list.size(); i++) {
        Watch w = watch_list[i];
        if (value_of(w.blocker) == 1) {
          watch_list[keep++] = w;
          continue;
        }
        auto& clause = clauses_[w.clause];
        int false_lit = neg(lit);
        if (clause[0] == false_lit) std::swap(clause[0], clause[1]);
        if (value_of(clause[0]) == 1) {
          watch_list[keep++] = {w.clause, clause[0]};
          continue;
        }
        bool moved = false;
        for (size_t j = 2; j < clause.size(); j++) {
          if (value_of(clause[j]) != 0) {
            std::swap(clause[1], clause[j]);
            watches_[neg(clause[1])].push_back({w.clause, clause[0]});
            moved = true;
            break;
          }
        }
        if (moved) continue;
        // unit or conflicting
        watch_list[keep++] = {w.clause, clause[0]};
        if (value_of(clause[0]) == 0) {
          for (size_t j = i + 1; j < watch_list.size(); j++) {
            watch_list[keep++] = watch_list[j];
          }
          watch_list.resize(keep);
          head_ = trail_.size();
          return w.clause;
        }
        enqueue(clause[0], w.clause);
      }
      watch_list.resize(keep);
    }
    return -1;
  }

  // First-UIP conflict analysis; returns the backtrack level and fills
  // learned with the asserting clause (asserting literal first).
  int analyze(int conflict, std::vector<int>& learned) {
    learned.clear();
    learned.push_back(0);  // slot for the asserting literal
    int counter = 0;
    int index = static_cast<int>(trail_.size()) - 1;
    int lit = -1;
    int clause = conflict;

    while (true) {
      for (int q : clauses_[clause]) {
        if (q == lit) continue;
        int v = var_of(q);
        if (!seen_[v] && level_[v] > 0) {
          seen_[v] = true;
          bump_activity(v);
          if (level_[v] >= decision_level()) {
            counter++;
          } else {
            learned.push_back(q);
          }
        }
      }
      while (!seen_[var_of(trail_[index])]) index--;
      lit = trail_[index];
      seen_[var_of(lit)] = false;
      counter--;
      index--;
      if (counter == 0) break;
      clause = reason_[var_of(lit)];
    }
    learned[0] = neg(lit);

    int backtrack = 0;
    if (learned.size() > 1) {
      size_t max_at = 1;
      for (size_t i = 2; i < learned.size(); i++) {
        if (level_[var_of(learned[i])] > level_[var_of(learned[max_at])]) max_at = i;
      }
      std::swap(learned[1], learned[max_at]);
      backtrack = level_[var_of(learned[1])];
    }
    for (size_t i = 1; i < learned.size(); i++) seen_[var_of(learned[i])] = false;
    return backtrack;
  }

  void cancel_until(int target_level) {
    if (decision_level() <= target_level) return;
    int limit = trail_limits_[target_level];
    for (int i = static_cast<int>(trail_.size()) - 1; i >= limit; i--) {
      int v = var_of(trail_[i]);
      phase_[v] = assign_[v] == 1;
      assign_[v] = kUndef;
      reason_[v] = -1;
    }
    trail_.resize(limit);
    trail_limits_.resize(target_level);
    head_ = trail_.size();
  }

  int pick_branch() {
    int best = -1;
    double best_activity = -1.0;
    for (int v = 0; v < num_vars_; v++) {
      if (assign_[v] == kUndef && activity_[v] > best_activity) {
        best = v;
        best_activity = activity_[v];
      }
    }
    if (best == -1) return -1;
    return phase_[best] ? 2 * best : 2 * best + 1;
  }

  void bump_activity(int v) {
    activity_[v] += activity_increment_;
    if (activity_[v] > 1e100) {
      for (double& a : activity_) a *= 1e-100;
      activity_increment_ *= 1e-100;
    }
  }

  void decay_activities() { activity_increment_ *= (1.0 / 0.95); }

  int num_vars_;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<Watch>> watches_;
  std::vector<int> units_;
  std::vector<char> assign_;
  std::vector<int> reason_;
  std::vector<int> level_;
  std::vector<double> activity_;
  std::vector<bool> phase_;
  std::vector<bool> seen_;
  std::vector<int> trail_;
  std::vector<int> trail_limits_;
  size_t head_ = 0;
  double activity_increment_ = 1.0;
};

}  // namespace

ModelResult solve_cnf(const CnfFormula& f, const SolverBudget& budget) {
  for (const auto& clause : f.clauses) {
    if (clause.empty()) throw std::invalid_argument("empty clause");
  }
  Cdcl solver(f);
  ModelResult result = solver.solve(budget);
  if (result.status == SolveStatus::Sat) {
    // sanity: the model must satisfy every clause
    for (const auto& clause : f.clauses) {
      bool satisfied = false;
      for (int lit : clause) {
        int var = std::abs(lit) - 1;
        if (result.model[var] == (lit > 0)) {
          satisfied = true;
          break;
        }
      }
      if (!satisfied) throw std::logic_error("solver returned a non-model");
    }
  }
  return result;
}

}  // namespace dagbook
