#include "locdiag/solver.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace locdiag {

namespace {

// Literals encode variable index v as v+1, negated as -(v+1). Clauses are
// sorted, duplicate-free literal vectors; tautological clauses are dropped
// during conversion.
using Clause = std::vector<int>;

class VarIndex {
 public:
  int index_of(const std::string& name) {
    auto [it, inserted] = map_.try_emplace(name, static_cast<int>(map_.size()));
    return it->second;
  }
  std::size_t size() const { return map_.size(); }

 private:
  std::map<std::string, int> map_;
};

bool tautological(const Clause& c) {
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] == -c[i - 1]) return true;
  }
  return false;
}

Clause merge_clause(const Clause& a, const Clause& b) {
  Clause out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
             [](int x, int y) { return std::abs(x) != std::abs(y) ? std::abs(x) < std::abs(y) : x < y; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Clause> distribute(const std::vector<Clause>& a, const std::vector<Clause>& b) {
  std::vector<Clause> out;
  out.reserve(a.size() * b.size());
  for (const Clause& ca : a) {
    for (const Clause& cb : b) {
      Clause merged = merge_clause(ca, cb);
      if (!tautological(merged)) out.push_back(std::move(merged));
    }
  }
  return out;
}

void append(std::vector<Clause>& into, std::vector<Clause>&& more) {
  for (Clause& c : more) into.push_back(std::move(c));
}

// Direct clausal conversion: implication elimination, negation pushing and
// or-over-and distribution in one pass over the tree. No auxiliary
// variables; bases here are tens of small formulas at most.
std::vector<Clause> clauses_of(const Formula& f, bool positive, VarIndex& vars) {
  switch (f.kind()) {
    case Formula::Kind::Falsum:
      return positive ? std::vector<Clause>{Clause{}} : std::vector<Clause>{};
    case Formula::Kind::Verum:
      return positive ? std::vector<Clause>{} : std::vector<Clause>{Clause{}};
    case Formula::Kind::Atom: {
      const int v = vars.index_of(f.atom_name()) + 1;
      return {Clause{positive ? v : -v}};
    }
    case Formula::Kind::Not:
      return clauses_of(f.child(), !positive, vars);
    case Formula::Kind::And: {
      if (positive) {
        auto out = clauses_of(f.left(), true, vars);
        append(out, clauses_of(f.right(), true, vars));
        return out;
      }
      return distribute(clauses_of(f.left(), false, vars), clauses_of(f.right(), false, vars));
    }
    case Formula::Kind::Or: {
      if (positive) {
        return distribute(clauses_of(f.left(), true, vars), clauses_of(f.right(), true, vars));
      }
      auto out = clauses_of(f.left(), false, vars);
      append(out, clauses_of(f.right(), false, vars));
      return out;
    }
    case Formula::Kind::Implies: {
      if (positive) {
        return distribute(clauses_of(f.left(), false, vars), clauses_of(f.right(), true, vars));
      }
      auto out = clauses_of(f.left(), true, vars);
      append(out, clauses_of(f.right(), false, vars));
      return out;
    }
  }
  return {};
}

enum : std::int8_t { kUnset = -1, kFalse = 0, kTrue = 1 };

bool lit_true(int lit, const std::vector<std::int8_t>& val) {
  const std::int8_t v = val[static_cast<std::size_t>(std::abs(lit)) - 1];
  return v != kUnset && (v == kTrue) == (lit > 0);
}

bool lit_false(int lit, const std::vector<std::int8_t>& val) {
  const std::int8_t v = val[static_cast<std::size_t>(std::abs(lit)) - 1];
  return v != kUnset && (v == kTrue) != (lit > 0);
}

bool dpll(const std::vector<Clause>& clauses, std::vector<std::int8_t> val) {
  // Unit propagation to fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause& c : clauses) {
      int unassigned = 0;
      bool satisfied = false;
      for (int lit : c) {
        if (lit_true(lit, val)) {
          satisfied = true;
          break;
        }
        if (!lit_false(lit, val)) unassigned = lit;
      }
      if (satisfied) continue;
      if (unassigned == 0) return false;  // conflict
      int remaining = 0;
      for (int lit : c) {
        if (!lit_false(lit, val)) ++remaining;
      }
      if (remaining == 1) {
        val[static_cast<std::size_t>(std::abs(unassigned)) - 1] =
            unassigned > 0 ? kTrue : kFalse;
        changed = true;
      }
    }
  }

  // Branch on the lowest-index unassigned variable of an open clause.
  int branch = 0;
  bool all_satisfied = true;
  for (const Clause& c : clauses) {
    bool satisfied = false;
    int lowest = 0;
    for (int lit : c) {
      if (lit_true(lit, val)) {
        satisfied = true;
        break;
      }
      if (!lit_false(lit, val)) {
        const int v = std::abs(lit);
        if (lowest == 0 || v < lowest) lowest = v;
      }
    }
    if (!satisfied) {
      all_satisfied = false;
      if (branch == 0 || (lowest != 0 && lowest < branch)) branch = lowest;
    }
  }
  if (all_satisfied) return true;

  val[static_cast<std::size_t>(branch) - 1] = kTrue;
  if (dpll(clauses, val)) return true;
  val[static_cast<std::size_t>(branch) - 1] = kFalse;
  return dpll(clauses, std::move(val));
}

bool solve(const std::vector<Clause>& clauses, std::size_t nvars) {
  for (const Clause& c : clauses) {
    if (c.empty()) return false;
  }
  return dpll(clauses, std::vector<std::int8_t>(nvars, kUnset));
}

}  // namespace

bool is_satisfiable(const BeliefBase& base, SolveStats* stats) {
  if (stats) ++stats->entailment_checks;
  VarIndex vars;
  std::vector<Clause> clauses;
  for (const Formula& f : base) {
    append(clauses, clauses_of(f, true, vars));
  }
  return solve(clauses, vars.size());
}

bool entails(const BeliefBase& base, const Formula& f, SolveStats* stats) {
  if (stats) ++stats->entailment_checks;
  VarIndex vars;
  std::vector<Clause> clauses;
  for (const Formula& g : base) {
    append(clauses, clauses_of(g, true, vars));
  }
  append(clauses, clauses_of(f, false, vars));
  return !solve(clauses, vars.size());
}

}  // namespace locdiag
