#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "locdiag/diagnosis.hpp"
#include "locdiag/formula.hpp"

namespace locdiag {

// One device component: output depends on the inputs and on the component
// behaving, witnessed by its ok atom.
struct ComponentDecl {
  std::string name;
  std::vector<Atom> inputs;
  Atom output;
  Atom ok_atom;
};

// Directed relatedness relation over atoms. Edges follow the dependence
// direction; no symmetry is imposed. Successor lists are kept sorted so
// traversals are deterministic.
class RelatednessGraph {
 public:
  void add_node(const Atom& a);
  void add_edge(const Atom& from, const Atom& to);

  const std::vector<Atom>& successors(const Atom& a) const;
  const AtomSet& nodes() const { return nodes_; }
  bool empty() const { return nodes_.empty(); }

  // input -> ok-atom -> output per component. Throws ContractError when two
  // components share an output.
  static RelatednessGraph from_components(const std::vector<ComponentDecl>& decls);

 private:
  AtomSet nodes_;
  std::map<Atom, std::vector<Atom>> edges_;
};

inline RelatednessGraph graph_from_components(const std::vector<ComponentDecl>& decls) {
  return RelatednessGraph::from_components(decls);
}

// Union of the successor sets, following arc direction only.
AtomSet adjacent(const RelatednessGraph& graph, const AtomSet& atoms);

// Resource bounds for retrieval. max_rounds caps frontier expansions,
// max_marked caps the total number of marked atoms; both absent means run
// until the activation dies out.
struct RetrievalBudget {
  std::optional<std::uint64_t> max_rounds;
  std::optional<std::uint64_t> max_marked;
};

struct Retrieval {
  std::vector<Atom> relevant;  // assumables in discovery order
  AtomSet marked;
  bool budget_exhausted = false;
};

// Spreads activation from the observation variables along the graph,
// collecting every assumable reached, in discovery order. Anytime: the
// relevant list under a smaller budget is a prefix of the list under any
// larger one. The optional interrupt hook is polled at marking granularity
// and turns wall-clock limits into a budget-exhausted stop.
Retrieval retrieve(const Formula& obs, const AtomSet& ass, const RelatednessGraph& graph,
                   const RetrievalBudget& budget = {},
                   const std::function<bool()>& interrupt = {});

// The observation plus every formula of sd + assumables mentioning a
// relevant atom, in relevance order, so a prefix keeps the most relevant
// component descriptions.
struct Compartment {
  std::vector<Formula> formulas;  // observation first
  std::vector<Atom> relevant;

  BeliefBase belief_base() const { return BeliefBase(formulas); }
};

// Requires relevant to be drawn from the system's assumables.
Compartment compartment(const Formula& obs, const System& system,
                        const std::vector<Atom>& relevant);

// Diagnosis confined to the compartment around the observation.
struct LocalDiagnosis {
  enum class Status {
    ok,                            // diagnoses computed (possibly just {})
    not_diagnosable_in_compartment,  // compartment contradicts the observation
    not_diagnosable_globally,        // so does the full description
  };

  std::vector<Diagnosis> diagnoses;
  std::vector<Atom> relevant;
  std::size_t compartment_size = 0;
  bool budget_exhausted = false;
  std::uint64_t entailment_calls = 0;
  Status status = Status::ok;
};

// retrieve, then compartment, then diagnose on the compartment system. When
// the compartment alone rules out a diagnosis the full description is probed
// once to tell a local dead end from a globally undiagnosable observation.
LocalDiagnosis local_diagnose(const System& system, const Formula& obs,
                              const RelatednessGraph& graph, const RetrievalBudget& budget = {},
                              SolveStats* stats = nullptr);

}  // namespace locdiag
