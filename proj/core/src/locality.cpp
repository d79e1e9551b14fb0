#include "locdiag/locality.hpp"

#include <algorithm>

#include "locdiag/errors.hpp"

namespace locdiag {

void RelatednessGraph::add_node(const Atom& a) { nodes_.insert(a); }

void RelatednessGraph::add_edge(const Atom& from, const Atom& to) {
  nodes_.insert(from);
  nodes_.insert(to);
  std::vector<Atom>& succ = edges_[from];
  auto it = std::lower_bound(succ.begin(), succ.end(), to);
  if (it == succ.end() || !(*it == to)) succ.insert(it, to);
}

const std::vector<Atom>& RelatednessGraph::successors(const Atom& a) const {
  static const std::vector<Atom> none;
  auto it = edges_.find(a);
  return it == edges_.end() ? none : it->second;
}

RelatednessGraph RelatednessGraph::from_components(const std::vector<ComponentDecl>& decls) {
  AtomSet outputs;
  RelatednessGraph graph;
  for (const ComponentDecl& decl : decls) {
    if (!outputs.insert(decl.output).second) {
      throw ContractError("duplicate component output: " + decl.output.name());
    }
    if (decl.inputs.empty()) {
      throw ContractError("component '" + decl.name + "' has no inputs");
    }
    for (const Atom& input : decl.inputs) {
      if (input == decl.output) {
        throw ContractError("component '" + decl.name + "' lists its output as an input");
      }
      graph.add_edge(input, decl.ok_atom);
    }
    graph.add_edge(decl.ok_atom, decl.output);
  }
  return graph;
}

AtomSet adjacent(const RelatednessGraph& graph, const AtomSet& atoms) {
  AtomSet out;
  for (const Atom& a : atoms) {
    const std::vector<Atom>& succ = graph.successors(a);
    out.insert(succ.begin(), succ.end());
  }
  return out;
}

Retrieval retrieve(const Formula& obs, const AtomSet& ass, const RelatednessGraph& graph,
                   const RetrievalBudget& budget, const std::function<bool()>& interrupt) {
  Retrieval result;

  auto mark = [&](const Atom& a) {
    if (result.marked.count(a) != 0) return true;
    if (budget.max_marked && result.marked.size() >= *budget.max_marked) {
      result.budget_exhausted = true;
      return false;
    }
    if (interrupt && interrupt()) {
      result.budget_exhausted = true;
      return false;
    }
    result.marked.insert(a);
    if (ass.count(a) != 0) result.relevant.push_back(a);
    return true;
  };

  const AtomSet seeds = obs.vars();
  for (const Atom& a : seeds) {
    if (!mark(a)) return result;
  }

  // First frontier: successors of the observation variables, in seed order.
  std::vector<Atom> frontier;
  auto extend = [&](const std::vector<Atom>& sources) {
    std::vector<Atom> next;
    for (const Atom& src : sources) {
      for (const Atom& succ : graph.successors(src)) {
        if (result.marked.count(succ) != 0) continue;
        if (std::find(next.begin(), next.end(), succ) == next.end()) next.push_back(succ);
      }
    }
    return next;
  };
  frontier = extend(std::vector<Atom>(seeds.begin(), seeds.end()));

  std::uint64_t rounds = 0;
  while (!frontier.empty()) {
    if (budget.max_rounds && rounds >= *budget.max_rounds) {
      result.budget_exhausted = true;
      break;
    }
    ++rounds;
    for (const Atom& a : frontier) {
      if (!mark(a)) return result;
    }
    frontier = extend(frontier);
  }
  return result;
}

Compartment compartment(const Formula& obs, const System& system,
                        const std::vector<Atom>& relevant) {
  for (const Atom& a : relevant) {
    if (system.ass.count(a) == 0) {
      throw ContractError("relevant atom '" + a.name() + "' is not an assumable");
    }
  }

  std::vector<Formula> pool(system.sd.begin(), system.sd.end());
  for (const Atom& a : system.ass) pool.push_back(Formula::atom(a));

  Compartment comp;
  comp.relevant = relevant;
  comp.formulas.push_back(obs);
  auto already_in = [&](const Formula& f) {
    return std::find(comp.formulas.begin(), comp.formulas.end(), f) != comp.formulas.end();
  };
  for (const Atom& a : relevant) {
    for (const Formula& f : pool) {
      if (f.vars().count(a) != 0 && !already_in(f)) comp.formulas.push_back(f);
    }
  }
  return comp;
}

LocalDiagnosis local_diagnose(const System& system, const Formula& obs,
                              const RelatednessGraph& graph, const RetrievalBudget& budget,
                              SolveStats* stats) {
  SolveStats local_stats;
  LocalDiagnosis out;

  const Retrieval retrieval = retrieve(obs, system.ass, graph, budget);
  out.relevant = retrieval.relevant;
  out.budget_exhausted = retrieval.budget_exhausted;

  const Compartment comp = compartment(obs, system, retrieval.relevant);
  out.compartment_size = comp.formulas.size();

  System focused;
  focused.ass = AtomSet(retrieval.relevant.begin(), retrieval.relevant.end());
  focused.sd = comp.belief_base();
  focused.sd.erase(obs);
  for (const Atom& a : focused.ass) focused.sd.erase(Formula::atom(a));

  out.diagnoses = diagnose(focused, obs, &local_stats);
  if (out.diagnoses.empty()) {
    // The compartment cannot absorb the observation. One full-base probe
    // tells whether the complete description fares any better.
    out.status = diagnosable(system, obs, &local_stats)
                     ? LocalDiagnosis::Status::not_diagnosable_in_compartment
                     : LocalDiagnosis::Status::not_diagnosable_globally;
  }

  out.entailment_calls = local_stats.entailment_checks;
  if (stats) stats->entailment_checks += local_stats.entailment_checks;
  return out;
}

}  // namespace locdiag
