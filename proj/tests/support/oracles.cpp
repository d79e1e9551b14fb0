#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace testsupport {

namespace {

std::vector<Atom> sorted_vars(const std::vector<Formula>& formulas) {
  AtomSet all;
  for (const Formula& f : formulas) {
    const AtomSet vs = f.vars();
    all.insert(vs.begin(), vs.end());
  }
  return {all.begin(), all.end()};
}

struct MaskSet {
  std::vector<Atom> vars;
  std::size_t words = 1;
  std::size_t rows = 1;

  explicit MaskSet(const std::vector<Formula>& formulas) : vars(sorted_vars(formulas)) {
    if (vars.size() > 24) throw std::runtime_error("truth-table oracle limited to 24 atoms");
    rows = std::size_t{1} << vars.size();
    words = (rows + 63) / 64;
  }

  std::vector<std::uint64_t> mask(const Formula& f) const {
    std::vector<std::uint64_t> bits(words, 0);
    std::map<Atom, bool> assignment;
    for (std::size_t row = 0; row < rows; ++row) {
      for (std::size_t v = 0; v < vars.size(); ++v) {
        assignment[vars[v]] = (row >> v) & 1;
      }
      if (eval(f, assignment)) bits[row / 64] |= std::uint64_t{1} << (row % 64);
    }
    return bits;
  }

  static bool any(const std::vector<std::uint64_t>& bits) {
    return std::any_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w != 0; });
  }
};

std::vector<std::uint64_t> and_all(const std::vector<std::vector<std::uint64_t>>& masks,
                                   std::size_t words, std::size_t rows) {
  std::vector<std::uint64_t> acc(words, ~std::uint64_t{0});
  if (rows % 64 != 0) acc.back() = (std::uint64_t{1} << (rows % 64)) - 1;
  for (const auto& m : masks) {
    for (std::size_t i = 0; i < words; ++i) acc[i] &= m[i];
  }
  return acc;
}

bool subset_bits(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

}  // namespace

bool eval(const Formula& f, const std::map<Atom, bool>& assignment) {
  switch (f.kind()) {
    case Formula::Kind::Falsum: return false;
    case Formula::Kind::Verum: return true;
    case Formula::Kind::Atom: return assignment.at(Atom(f.atom_name()));
    case Formula::Kind::Not: return !eval(f.child(), assignment);
    case Formula::Kind::And: return eval(f.left(), assignment) && eval(f.right(), assignment);
    case Formula::Kind::Or: return eval(f.left(), assignment) || eval(f.right(), assignment);
    case Formula::Kind::Implies:
      return !eval(f.left(), assignment) || eval(f.right(), assignment);
  }
  return false;
}

std::vector<std::uint64_t> truth_mask(const Formula& f, const std::vector<Atom>& vars) {
  MaskSet ms({});
  ms.vars = vars;
  ms.rows = std::size_t{1} << vars.size();
  ms.words = (ms.rows + 63) / 64;
  return ms.mask(f);
}

bool tt_satisfiable(const BeliefBase& base) {
  const std::vector<Formula> formulas(base.begin(), base.end());
  MaskSet ms(formulas);
  std::vector<std::vector<std::uint64_t>> masks;
  masks.reserve(formulas.size());
  for (const Formula& f : formulas) masks.push_back(ms.mask(f));
  return MaskSet::any(and_all(masks, ms.words, ms.rows));
}

bool tt_entails(const BeliefBase& base, const Formula& f) {
  BeliefBase refute = base;
  refute.insert(Formula::negation(f));
  return !tt_satisfiable(refute);
}

std::vector<BeliefBase> brute_kernels(const BeliefBase& base, const Formula& target) {
  const std::vector<Formula> formulas(base.begin(), base.end());
  if (formulas.size() > 16) throw std::runtime_error("brute_kernels limited to 16 formulas");

  std::vector<Formula> with_target = formulas;
  with_target.push_back(Formula::negation(target));
  MaskSet ms(with_target);
  std::vector<std::vector<std::uint64_t>> masks;
  for (const Formula& f : formulas) masks.push_back(ms.mask(f));
  const std::vector<std::uint64_t> target_mask = ms.mask(target);

  // Subset entails target iff no row satisfies the subset but not the target.
  const std::uint32_t limit = std::uint32_t{1} << formulas.size();
  std::vector<std::uint32_t> entailing;
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    std::vector<std::uint64_t> acc(ms.words, ~std::uint64_t{0});
    if (ms.rows % 64 != 0) acc.back() = (std::uint64_t{1} << (ms.rows % 64)) - 1;
    for (std::size_t i = 0; i < formulas.size(); ++i) {
      if (bits & (std::uint32_t{1} << i)) {
        for (std::size_t w = 0; w < ms.words; ++w) acc[w] &= masks[i][w];
      }
    }
    bool counterexample = false;
    for (std::size_t w = 0; w < ms.words; ++w) {
      if (acc[w] & ~target_mask[w]) {
        counterexample = true;
        break;
      }
    }
    if (!counterexample) entailing.push_back(bits);
  }

  std::vector<BeliefBase> kernels;
  for (std::uint32_t bits : entailing) {
    const bool minimal =
        std::none_of(entailing.begin(), entailing.end(), [&](std::uint32_t other) {
          return other != bits && subset_bits(other, bits);
        });
    if (!minimal) continue;
    std::vector<Formula> members;
    for (std::size_t i = 0; i < formulas.size(); ++i) {
      if (bits & (std::uint32_t{1} << i)) members.push_back(formulas[i]);
    }
    kernels.emplace_back(std::move(members));
  }
  std::sort(kernels.begin(), kernels.end());
  return kernels;
}

namespace {

std::vector<AtomSet> minimal_atom_sets(std::vector<AtomSet> candidates) {
  std::vector<AtomSet> minimal;
  for (const AtomSet& c : candidates) {
    const bool keep = std::none_of(candidates.begin(), candidates.end(), [&](const AtomSet& o) {
      return o != c && std::includes(c.begin(), c.end(), o.begin(), o.end());
    });
    if (keep && std::find(minimal.begin(), minimal.end(), c) == minimal.end()) {
      minimal.push_back(c);
    }
  }
  std::sort(minimal.begin(), minimal.end(), [](const AtomSet& a, const AtomSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return minimal;
}

template <typename Pred>
std::vector<AtomSet> minimal_subsets_where(const AtomSet& universe, Pred pred) {
  const std::vector<Atom> atoms(universe.begin(), universe.end());
  if (atoms.size() > 20) throw std::runtime_error("subset enumeration limited to 20 atoms");
  std::vector<AtomSet> hits;
  const std::uint32_t limit = std::uint32_t{1} << atoms.size();
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    AtomSet subset;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (bits & (std::uint32_t{1} << i)) subset.insert(atoms[i]);
    }
    if (pred(subset)) hits.push_back(std::move(subset));
  }
  return minimal_atom_sets(std::move(hits));
}

}  // namespace

std::vector<AtomSet> brute_minimal_hitting_sets(const std::vector<AtomSet>& family) {
  AtomSet universe;
  for (const AtomSet& s : family) universe.insert(s.begin(), s.end());
  return minimal_subsets_where(universe, [&](const AtomSet& h) {
    return std::all_of(family.begin(), family.end(), [&](const AtomSet& s) {
      return std::any_of(s.begin(), s.end(), [&](const Atom& a) { return h.count(a) != 0; });
    });
  });
}

std::vector<AtomSet> brute_minimal_conflicts(const System& system, const Formula& obs) {
  return minimal_subsets_where(system.ass, [&](const AtomSet& conf) {
    BeliefBase base = system.sd;
    base.insert(obs);
    for (const Atom& a : conf) base.insert(Formula::atom(a));
    return !tt_satisfiable(base);
  });
}

std::vector<AtomSet> brute_diagnoses(const System& system, const Formula& obs) {
  return minimal_subsets_where(system.ass, [&](const AtomSet& delta) {
    BeliefBase base = system.sd;
    base.insert(obs);
    for (const Atom& a : system.ass) {
      if (delta.count(a) == 0) base.insert(Formula::atom(a));
    }
    return tt_satisfiable(base);
  });
}

std::vector<BeliefBase> brute_minimal_incisions(const KernelCollection& kernels,
                                                const BeliefBase& preferred) {
  BeliefBase universe;
  for (const auto& k : kernels.kernels) universe = universe.unioned(k);
  const std::vector<Formula> formulas(universe.begin(), universe.end());
  if (formulas.size() > 20) throw std::runtime_error("incision enumeration limited to 20 formulas");

  const bool confine = std::all_of(kernels.kernels.begin(), kernels.kernels.end(),
                                   [&](const BeliefBase& k) { return k.intersects(preferred); });

  std::vector<BeliefBase> satisfying;
  const std::uint32_t limit = std::uint32_t{1} << formulas.size();
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    BeliefBase sigma;
    for (std::size_t i = 0; i < formulas.size(); ++i) {
      if (bits & (std::uint32_t{1} << i)) sigma.insert(formulas[i]);
    }
    const bool hits_all =
        std::all_of(kernels.kernels.begin(), kernels.kernels.end(),
                    [&](const BeliefBase& k) { return k.empty() || k.intersects(sigma); });
    if (!hits_all) continue;
    if (confine && !sigma.subset_of(preferred)) continue;
    satisfying.push_back(std::move(sigma));
  }

  std::vector<BeliefBase> minimal;
  for (const BeliefBase& s : satisfying) {
    const bool keep =
        std::none_of(satisfying.begin(), satisfying.end(),
                     [&](const BeliefBase& o) { return !(o == s) && o.subset_of(s); });
    if (keep) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end(), [](const BeliefBase& a, const BeliefBase& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.compare(b) < 0;
  });
  return minimal;
}

AtomSet reachable_from(const RelatednessGraph& graph, const AtomSet& seeds) {
  AtomSet seen = seeds;
  std::vector<Atom> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    const Atom a = stack.back();
    stack.pop_back();
    for (const Atom& next : graph.successors(a)) {
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return seen;
}

}  // namespace testsupport
