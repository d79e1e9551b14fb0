#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "locdiag/formula.hpp"

namespace locdiag {

// A finite set of formulas. Duplicates collapse and iteration follows the
// canonical formula order, so every traversal is deterministic.
class BeliefBase {
 public:
  BeliefBase() = default;
  explicit BeliefBase(std::vector<Formula> formulas);
  BeliefBase(std::initializer_list<Formula> formulas);

  // Returns false when the formula was already present.
  bool insert(const Formula& f);
  bool erase(const Formula& f);
  bool contains(const Formula& f) const;

  std::size_t size() const { return formulas_.size(); }
  bool empty() const { return formulas_.empty(); }
  const std::vector<Formula>& formulas() const { return formulas_; }

  auto begin() const { return formulas_.begin(); }
  auto end() const { return formulas_.end(); }

  BeliefBase unioned(const BeliefBase& other) const;
  BeliefBase minus(const BeliefBase& other) const;
  BeliefBase intersect(const BeliefBase& other) const;
  bool intersects(const BeliefBase& other) const;
  bool subset_of(const BeliefBase& other) const;

  // Lexicographic over the canonical element sequences; the order used when
  // a single set must be chosen among equally minimal ones.
  int compare(const BeliefBase& other) const;

  friend bool operator==(const BeliefBase& a, const BeliefBase& b) {
    return a.compare(b) == 0;
  }
  friend std::strong_ordering operator<=>(const BeliefBase& a, const BeliefBase& b) {
    const int c = a.compare(b);
    return c < 0    ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  std::vector<Formula> formulas_;  // sorted, unique
};

}  // namespace locdiag
