#include "locdiag/kernels.hpp"

#include <algorithm>
#include <set>

#include "locdiag/errors.hpp"
#include "locdiag/hitting_sets.hpp"

namespace locdiag {

namespace {

std::set<Formula> as_set(const BeliefBase& base) {
  return {base.begin(), base.end()};
}

BeliefBase from_set(const std::set<Formula>& fs) {
  return BeliefBase(std::vector<Formula>(fs.begin(), fs.end()));
}

}  // namespace

Kernel shrink_to_kernel(const BeliefBase& candidate, const Formula& target, SolveStats* stats) {
  if (!entails(candidate, target, stats)) {
    throw ContractError("shrink_to_kernel: candidate does not entail the target");
  }
  BeliefBase kernel = candidate;
  for (const Formula& f : candidate) {
    BeliefBase without = kernel;
    without.erase(f);
    if (entails(without, target, stats)) kernel = std::move(without);
  }
  return kernel;
}

// Dualization loop: grow the kernel set until the complement of every
// minimal hitting set of the kernels found so far fails to entail the
// target. Each round either proves completeness or produces a kernel that
// misses one such hitting set, so it cannot repeat an earlier kernel.
KernelCollection compute_kernels(const BeliefBase& base, const Formula& target,
                                 SolveStats* stats) {
  KernelCollection out{target, {}};
  for (;;) {
    std::vector<std::set<Formula>> family;
    family.reserve(out.kernels.size());
    for (const Kernel& k : out.kernels) family.push_back(as_set(k));

    bool grew = false;
    for (const std::set<Formula>& hs : minimal_hitting_sets(family)) {
      BeliefBase rest = base.minus(from_set(hs));
      if (entails(rest, target, stats)) {
        out.kernels.push_back(shrink_to_kernel(rest, target, stats));
        grew = true;
        break;
      }
    }
    if (!grew) break;
  }
  std::sort(out.kernels.begin(), out.kernels.end(),
            [](const Kernel& a, const Kernel& b) { return a.compare(b) < 0; });
  return out;
}

std::vector<Incision> enumerate_minimal_incisions(const KernelCollection& kernels,
                                                  const BeliefBase& preferred) {
  const bool confined = std::all_of(
      kernels.kernels.begin(), kernels.kernels.end(),
      [&](const Kernel& k) { return k.intersects(preferred); });

  std::vector<std::set<Formula>> family;
  for (const Kernel& k : kernels.kernels) {
    if (k.empty()) continue;
    family.push_back(as_set(confined ? k.intersect(preferred) : k));
  }

  std::vector<Incision> out;
  for (const std::set<Formula>& hs : minimal_hitting_sets(family)) {
    out.push_back(from_set(hs));
  }
  std::sort(out.begin(), out.end(), [](const Incision& a, const Incision& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.compare(b) < 0;
  });
  return out;
}

Incision a_minimal_incision(const KernelCollection& kernels, const BeliefBase& preferred) {
  const std::vector<Incision> all = enumerate_minimal_incisions(kernels, preferred);
  Incision best;
  bool have = false;
  for (const Incision& candidate : all) {
    if (!have || candidate.compare(best) < 0) {
      best = candidate;
      have = true;
    }
  }
  return best;
}

BeliefBase semi_revise(const BeliefBase& base, const Formula& input,
                       const BeliefBase& preferred, SolveStats* stats) {
  BeliefBase expanded = base;
  expanded.insert(input);
  const KernelCollection kc = compute_kernels(expanded, Formula::falsum(), stats);
  return expanded.minus(a_minimal_incision(kc, preferred));
}

BeliefBase consolidate(const BeliefBase& base, const BeliefBase& preferred, SolveStats* stats) {
  const KernelCollection kc = compute_kernels(base, Formula::falsum(), stats);
  return base.minus(a_minimal_incision(kc, preferred));
}

}  // namespace locdiag
