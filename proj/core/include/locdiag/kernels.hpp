#pragma once

#include <vector>

#include "locdiag/belief_base.hpp"
#include "locdiag/formula.hpp"
#include "locdiag/solver.hpp"

namespace locdiag {

// A kernel is a subset-minimal subset of some base that entails the target
// formula; an incision is a set of formulas taken from the kernels of a
// collection, at least one per non-empty kernel.
using Kernel = BeliefBase;
using Incision = BeliefBase;

// All kernels of one base for one target, in canonical order. Kernels are
// pairwise incomparable under inclusion.
struct KernelCollection {
  Formula target;
  std::vector<Kernel> kernels;
};

// Deletion-based minimization: scans the candidate in canonical order and
// drops every formula whose removal keeps the target entailed. Requires the
// candidate to entail the target.
Kernel shrink_to_kernel(const BeliefBase& candidate, const Formula& target,
                        SolveStats* stats = nullptr);

// Every subset-minimal subset of `base` entailing `target`. Empty collection
// iff the base does not entail the target; the single empty kernel iff the
// target is a tautology.
KernelCollection compute_kernels(const BeliefBase& base, const Formula& target,
                                 SolveStats* stats = nullptr);

// The deterministic preferred-minimal incision: covered by the union of the
// kernels, hits every non-empty kernel, stays inside `preferred` whenever
// every kernel meets `preferred`, and is subset-minimal with all that; ties
// resolve to the lexicographically least set under the canonical formula
// order.
Incision a_minimal_incision(const KernelCollection& kernels, const BeliefBase& preferred);

// All incisions a preferred-minimal incision function could return for this
// collection, sorted by cardinality then canonical order.
std::vector<Incision> enumerate_minimal_incisions(const KernelCollection& kernels,
                                                  const BeliefBase& preferred);

// Adds `input`, then restores consistency by cutting a preferred-minimal
// incision across the inconsistency kernels. The result is always
// satisfiable and equals base + input when that union is satisfiable.
BeliefBase semi_revise(const BeliefBase& base, const Formula& input,
                       const BeliefBase& preferred, SolveStats* stats = nullptr);

// Consistency restoration without new input: the identity on satisfiable
// bases.
BeliefBase consolidate(const BeliefBase& base, const BeliefBase& preferred,
                       SolveStats* stats = nullptr);

}  // namespace locdiag
