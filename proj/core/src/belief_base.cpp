#include "locdiag/belief_base.hpp"

#include <algorithm>

namespace locdiag {

namespace {

bool formula_less(const Formula& a, const Formula& b) { return a.compare(b) < 0; }

}  // namespace

BeliefBase::BeliefBase(std::vector<Formula> formulas) : formulas_(std::move(formulas)) {
  std::sort(formulas_.begin(), formulas_.end(), formula_less);
  formulas_.erase(std::unique(formulas_.begin(), formulas_.end()), formulas_.end());
}

BeliefBase::BeliefBase(std::initializer_list<Formula> formulas)
    : BeliefBase(std::vector<Formula>(formulas)) {}

bool BeliefBase::insert(const Formula& f) {
  auto it = std::lower_bound(formulas_.begin(), formulas_.end(), f, formula_less);
  if (it != formulas_.end() && *it == f) return false;
  formulas_.insert(it, f);
  return true;
}

bool BeliefBase::erase(const Formula& f) {
  auto it = std::lower_bound(formulas_.begin(), formulas_.end(), f, formula_less);
  if (it == formulas_.end() || !(*it == f)) return false;
  formulas_.erase(it);
  return true;
}

bool BeliefBase::contains(const Formula& f) const {
  return std::binary_search(formulas_.begin(), formulas_.end(), f, formula_less);
}

BeliefBase BeliefBase::unioned(const BeliefBase& other) const {
  std::vector<Formula> out;
  out.reserve(size() + other.size());
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out),
                 formula_less);
  BeliefBase result;
  result.formulas_ = std::move(out);
  return result;
}

BeliefBase BeliefBase::minus(const BeliefBase& other) const {
  std::vector<Formula> out;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out),
                      formula_less);
  BeliefBase result;
  result.formulas_ = std::move(out);
  return result;
}

BeliefBase BeliefBase::intersect(const BeliefBase& other) const {
  std::vector<Formula> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out),
                        formula_less);
  BeliefBase result;
  result.formulas_ = std::move(out);
  return result;
}

bool BeliefBase::intersects(const BeliefBase& other) const {
  auto a = begin();
  auto b = other.begin();
  while (a != end() && b != other.end()) {
    const int c = a->compare(*b);
    if (c == 0) return true;
    if (c < 0) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

bool BeliefBase::subset_of(const BeliefBase& other) const {
  return std::includes(other.begin(), other.end(), begin(), end(), formula_less);
}

int BeliefBase::compare(const BeliefBase& other) const {
  auto a = begin();
  auto b = other.begin();
  while (a != end() && b != other.end()) {
    const int c = a->compare(*b);
    if (c != 0) return c;
    ++a;
    ++b;
  }
  if (a == end() && b == other.end()) return 0;
  return a == end() ? -1 : 1;
}

}  // namespace locdiag
