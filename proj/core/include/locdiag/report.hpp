#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace locdiag {

// Machine-readable result of one engine run. Atom-set lists are sorted by
// cardinality then lexicographically; `relevant` keeps retrieval order.
struct RunReport {
  std::vector<std::vector<std::string>> diagnoses;
  std::vector<std::vector<std::string>> conflict_sets;
  std::vector<std::string> relevant;
  std::uint64_t compartment_size = 0;
  std::uint64_t total_formulas = 0;
  std::uint64_t entailment_calls = 0;
  std::uint64_t elapsed_ms = 0;
  bool budget_exhausted = false;
};

// Single-line JSON with exactly the RunReport fields, in declaration order.
// Re-serializing the parsed output reproduces the bytes.
std::string to_json(const RunReport& report);

void print_human(std::ostream& os, const RunReport& report);

}  // namespace locdiag
