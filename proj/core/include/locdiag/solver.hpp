#pragma once

#include <cstdint>

#include "locdiag/belief_base.hpp"
#include "locdiag/formula.hpp"

namespace locdiag {

// Counts consequence-engine work so callers can compare the cost of a full
// run against a focused one. Every is_satisfiable / entails invocation adds
// one to entailment_checks when a stats object is supplied.
struct SolveStats {
  std::uint64_t entailment_checks = 0;
};

// True iff some truth assignment satisfies every formula in the base.
bool is_satisfiable(const BeliefBase& base, SolveStats* stats = nullptr);

// Classical consequence by refutation: base |= f iff base + !f is
// unsatisfiable.
bool entails(const BeliefBase& base, const Formula& f, SolveStats* stats = nullptr);

}  // namespace locdiag
