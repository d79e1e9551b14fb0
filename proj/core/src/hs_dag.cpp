#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "locdiag/diagnosis.hpp"
#include "locdiag/errors.hpp"

namespace locdiag {

namespace {

bool disjoint(const AtomSet& a, const AtomSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

bool subset(const AtomSet& small, const AtomSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

constexpr int kNoLabel = -1;

struct Node {
  AtomSet path;                  // edge labels from the root
  int conflict = kNoLabel;       // index into the conflict cache
  bool processed = false;
  bool removed = false;
  std::map<Atom, int> children;  // edge label -> node
  std::set<int> parents;
};

}  // namespace

std::vector<AtomSet> build_hs_dag(const ConflictOracle& oracle) {
  std::vector<Node> nodes;
  std::map<AtomSet, int> node_at;              // node reuse, keyed by path
  std::vector<ConflictSet> conflicts;          // discovery order
  std::vector<bool> alive;                     // false once superseded by a subset
  std::set<std::pair<std::size_t, AtomSet>> queue;  // cardinality-first processing
  std::vector<AtomSet> hitting;                // completed (checked) paths

  auto add_node = [&](AtomSet path) {
    const int id = static_cast<int>(nodes.size());
    queue.emplace(path.size(), path);
    node_at.emplace(path, id);
    Node node;
    node.path = std::move(path);
    nodes.push_back(std::move(node));
    return id;
  };
  add_node({});

  // A strictly smaller conflict supersedes a cached one: relabel its nodes
  // and cut the edges for the dropped atoms. Only unprocessed nodes that
  // lose their last parent are discarded; they have no children yet.
  auto supersede = [&](int old_idx, int new_idx) {
    alive[old_idx] = false;
    for (std::size_t m = 0; m < nodes.size(); ++m) {
      Node& holder = nodes[m];
      if (holder.removed || holder.conflict != old_idx) continue;
      holder.conflict = new_idx;
      for (const Atom& dropped : conflicts[old_idx]) {
        if (conflicts[new_idx].count(dropped) != 0) continue;
        auto edge = holder.children.find(dropped);
        if (edge == holder.children.end()) continue;
        Node& child = nodes[edge->second];
        child.parents.erase(static_cast<int>(m));
        if (child.parents.empty() && !child.processed) {
          child.removed = true;
          queue.erase({child.path.size(), child.path});
          node_at.erase(child.path);
        }
        holder.children.erase(edge);
      }
    }
  };

  while (!queue.empty()) {
    const AtomSet path = queue.begin()->second;
    queue.erase(queue.begin());
    const int id = node_at.at(path);
    nodes[id].processed = true;

    // Close: a completed hitting set below this path makes every extension
    // non-minimal.
    if (std::any_of(hitting.begin(), hitting.end(),
                    [&](const AtomSet& h) { return subset(h, path); })) {
      continue;
    }

    // Label: reuse the first cached conflict the path misses, otherwise ask
    // the oracle.
    int label = kNoLabel;
    for (std::size_t i = 0; i < conflicts.size(); ++i) {
      if (alive[i] && disjoint(conflicts[i], path)) {
        label = static_cast<int>(i);
        break;
      }
    }
    if (label == kNoLabel) {
      std::optional<ConflictSet> got = oracle(path);
      if (!got) {
        hitting.push_back(path);
        continue;
      }
      if (!disjoint(*got, path)) {
        throw ContractError("conflict oracle returned a set meeting the excluded atoms");
      }
      label = static_cast<int>(conflicts.size());
      conflicts.push_back(std::move(*got));
      alive.push_back(true);
      for (int i = 0; i < label; ++i) {
        if (alive[i] && conflicts[label] != conflicts[i] &&
            subset(conflicts[label], conflicts[i])) {
          supersede(i, label);
        }
      }
    }
    nodes[id].conflict = label;

    for (const Atom& a : conflicts[label]) {
      AtomSet child_path = path;
      child_path.insert(a);
      auto found = node_at.find(child_path);
      const int child = found != node_at.end() ? found->second : add_node(std::move(child_path));
      nodes[child].parents.insert(id);
      nodes[id].children.emplace(a, child);
    }
  }

  std::sort(hitting.begin(), hitting.end(), [](const AtomSet& a, const AtomSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return hitting;
}

}  // namespace locdiag
