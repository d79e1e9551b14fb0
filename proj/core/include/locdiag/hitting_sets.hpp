#pragma once

#include <algorithm>
#include <set>
#include <vector>

namespace locdiag {

namespace detail {

template <typename T>
bool set_intersects(const std::set<T>& a, const std::set<T>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

template <typename T>
bool set_includes(const std::set<T>& big, const std::set<T>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Cardinality first, then element-wise; a deterministic total order on sets.
template <typename T>
bool set_size_lex_less(const std::set<T>& a, const std::set<T>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

// All subset-minimal sets intersecting every member of the family, computed
// by Berge's transversal product with minimization after every step. Returns
// {{}} for the empty family and {} when some member is empty (nothing can
// hit the empty set). Output is sorted by cardinality, then element-wise.
template <typename T>
std::vector<std::set<T>> minimal_hitting_sets(const std::vector<std::set<T>>& family) {
  std::vector<std::set<T>> transversals{std::set<T>{}};
  for (const std::set<T>& member : family) {
    if (member.empty()) return {};
    std::vector<std::set<T>> grown;
    for (const std::set<T>& t : transversals) {
      if (detail::set_intersects(t, member)) {
        grown.push_back(t);
      } else {
        for (const T& e : member) {
          std::set<T> extended = t;
          extended.insert(e);
          grown.push_back(std::move(extended));
        }
      }
    }
    std::sort(grown.begin(), grown.end(), detail::set_size_lex_less<T>);
    std::vector<std::set<T>> minimal;
    for (std::set<T>& candidate : grown) {
      const bool subsumed = std::any_of(
          minimal.begin(), minimal.end(),
          [&](const std::set<T>& kept) { return detail::set_includes(candidate, kept); });
      if (!subsumed) minimal.push_back(std::move(candidate));
    }
    transversals = std::move(minimal);
  }
  return transversals;
}

}  // namespace locdiag
