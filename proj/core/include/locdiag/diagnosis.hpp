#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "locdiag/belief_base.hpp"
#include "locdiag/formula.hpp"
#include "locdiag/kernels.hpp"
#include "locdiag/solver.hpp"

namespace locdiag {

// A device under diagnosis: a system description plus the assumable atoms
// (one okX per component, asserting that the component behaves). Assumables
// normally occur inside the description as well.
struct System {
  BeliefBase sd;
  AtomSet ass;
};

using ConflictSet = AtomSet;
using Diagnosis = AtomSet;

// The base the consequence machinery works on: sd + one unit formula per
// assumable + the observation.
BeliefBase system_base(const System& system, const Formula& obs);

// A diagnosis exists iff the description alone is consistent with the
// observation.
bool diagnosable(const System& system, const Formula& obs, SolveStats* stats = nullptr);

// Projects every inconsistency kernel of sd + assumables + obs onto the
// assumables and keeps the subset-minimal projections. Projections of
// distinct kernels can nest, so the filter step is load-bearing.
std::vector<ConflictSet> minimal_conflict_sets(const System& system, const Formula& obs,
                                               SolveStats* stats = nullptr);

// All subset-minimal hitting sets of the collection, sorted by cardinality
// then lexicographically. {{}} for the empty collection; {} when a member is
// empty.
std::vector<AtomSet> minimal_hitting_sets(const std::vector<AtomSet>& collection);

// Minimal diagnoses: the minimal hitting sets of the minimal conflict sets.
// Empty exactly when not diagnosable; {{}} when the observation is already
// consistent with the whole system.
std::vector<Diagnosis> diagnose(const System& system, const Formula& obs,
                                SolveStats* stats = nullptr);

// One diagnosis, obtained as the assumables cut by semi-revising
// sd + assumables with the observation under assumable preference. Throws
// NotDiagnosableError when no diagnosis exists.
Diagnosis diagnose_one(const System& system, const Formula& obs, SolveStats* stats = nullptr);

// Yields some conflict set disjoint from the excluded atoms, or nothing when
// none exists. Conflicts produced this way are minimal as kernels but their
// assumable projections need not be minimal conflict sets.
using ConflictOracle = std::function<std::optional<ConflictSet>(const AtomSet& excluded)>;

// The lazy oracle backing build_hs_dag for a concrete system: satisfiability
// probe on sd + (assumables minus excluded) + obs, then one kernel shrink.
ConflictOracle make_conflict_oracle(const System& system, const Formula& obs,
                                    SolveStats* stats = nullptr);

// Reiter-style hitting-set search over lazily discovered conflicts, in the
// corrected DAG formulation: nodes are reused by edge path, nodes subsumed
// by a completed hitting set close, and when a strictly smaller conflict
// turns up, nodes carrying the larger label are relabeled and the edges for
// the dropped atoms cut. Complete for oracles that return non-minimal
// conflict sets.
std::vector<AtomSet> build_hs_dag(const ConflictOracle& oracle);

}  // namespace locdiag
