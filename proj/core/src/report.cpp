#include "locdiag/report.hpp"

#include <ostream>

#include <json.hpp>

namespace locdiag {

std::string to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["diagnoses"] = report.diagnoses;
  j["conflict_sets"] = report.conflict_sets;
  j["relevant"] = report.relevant;
  j["compartment_size"] = report.compartment_size;
  j["total_formulas"] = report.total_formulas;
  j["entailment_calls"] = report.entailment_calls;
  j["elapsed_ms"] = report.elapsed_ms;
  j["budget_exhausted"] = report.budget_exhausted;
  return j.dump();
}

namespace {

void print_atom_sets(std::ostream& os, const char* title,
                     const std::vector<std::vector<std::string>>& sets) {
  os << title << " (" << sets.size() << "):\n";
  for (const auto& set : sets) {
    os << "  {";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) os << ", ";
      os << set[i];
    }
    os << "}\n";
  }
}

}  // namespace

void print_human(std::ostream& os, const RunReport& report) {
  print_atom_sets(os, "diagnoses", report.diagnoses);
  print_atom_sets(os, "conflict sets", report.conflict_sets);
  os << "relevant:";
  for (const std::string& a : report.relevant) os << ' ' << a;
  os << "\ncompartment: " << report.compartment_size << " of " << report.total_formulas
     << " formulas\n"
     << "entailment calls: " << report.entailment_calls << "\n"
     << "elapsed: " << report.elapsed_ms << " ms\n";
  if (report.budget_exhausted) os << "budget exhausted\n";
}

}  // namespace locdiag
