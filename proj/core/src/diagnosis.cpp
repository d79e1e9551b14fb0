#include "locdiag/diagnosis.hpp"

#include <algorithm>

#include "locdiag/errors.hpp"
#include "locdiag/hitting_sets.hpp"

namespace locdiag {

namespace {

bool size_lex_less(const AtomSet& a, const AtomSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

BeliefBase assumable_units(const AtomSet& ass) {
  BeliefBase units;
  for (const Atom& a : ass) units.insert(Formula::atom(a));
  return units;
}

ConflictSet project_on_assumables(const Kernel& kernel, const AtomSet& ass) {
  ConflictSet out;
  for (const Formula& f : kernel) {
    if (f.kind() == Formula::Kind::Atom) {
      Atom a(f.atom_name());
      if (ass.count(a) != 0) out.insert(std::move(a));
    }
  }
  return out;
}

}  // namespace

BeliefBase system_base(const System& system, const Formula& obs) {
  BeliefBase base = system.sd.unioned(assumable_units(system.ass));
  base.insert(obs);
  return base;
}

bool diagnosable(const System& system, const Formula& obs, SolveStats* stats) {
  BeliefBase base = system.sd;
  base.insert(obs);
  return is_satisfiable(base, stats);
}

std::vector<ConflictSet> minimal_conflict_sets(const System& system, const Formula& obs,
                                               SolveStats* stats) {
  const KernelCollection kc = compute_kernels(system_base(system, obs), Formula::falsum(), stats);

  std::vector<ConflictSet> projections;
  for (const Kernel& k : kc.kernels) {
    ConflictSet conf = project_on_assumables(k, system.ass);
    if (std::find(projections.begin(), projections.end(), conf) == projections.end()) {
      projections.push_back(std::move(conf));
    }
  }

  std::vector<ConflictSet> minimal;
  for (const ConflictSet& c : projections) {
    const bool has_proper_subset =
        std::any_of(projections.begin(), projections.end(), [&](const ConflictSet& other) {
          return other != c && std::includes(c.begin(), c.end(), other.begin(), other.end());
        });
    if (!has_proper_subset) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), size_lex_less);
  return minimal;
}

std::vector<AtomSet> minimal_hitting_sets(const std::vector<AtomSet>& collection) {
  return minimal_hitting_sets<Atom>(collection);
}

std::vector<Diagnosis> diagnose(const System& system, const Formula& obs, SolveStats* stats) {
  return minimal_hitting_sets(minimal_conflict_sets(system, obs, stats));
}

Diagnosis diagnose_one(const System& system, const Formula& obs, SolveStats* stats) {
  if (!diagnosable(system, obs, stats)) {
    throw NotDiagnosableError("system description contradicts the observation");
  }
  const KernelCollection kc = compute_kernels(system_base(system, obs), Formula::falsum(), stats);
  const Incision cut = a_minimal_incision(kc, assumable_units(system.ass));

  Diagnosis out;
  for (const Formula& f : cut) {
    // Whenever a diagnosis exists every kernel meets the assumables, so the
    // preferred-minimal incision contains assumable units only.
    if (f.kind() != Formula::Kind::Atom || system.ass.count(Atom(f.atom_name())) == 0) {
      throw ContractError("incision left the assumables on a diagnosable system");
    }
    out.insert(Atom(f.atom_name()));
  }
  return out;
}

ConflictOracle make_conflict_oracle(const System& system, const Formula& obs, SolveStats* stats) {
  return [system, obs, stats](const AtomSet& excluded) -> std::optional<ConflictSet> {
    AtomSet kept;
    std::set_difference(system.ass.begin(), system.ass.end(), excluded.begin(), excluded.end(),
                        std::inserter(kept, kept.end()));
    BeliefBase base = system.sd.unioned(assumable_units(kept));
    base.insert(obs);
    if (is_satisfiable(base, stats)) return std::nullopt;
    return project_on_assumables(shrink_to_kernel(base, Formula::falsum(), stats), system.ass);
  };
}

}  // namespace locdiag
