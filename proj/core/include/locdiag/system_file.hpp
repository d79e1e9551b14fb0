#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "locdiag/diagnosis.hpp"
#include "locdiag/locality.hpp"

namespace locdiag {

// Parsed form of the plain-text system format:
//
//   [SD]          one formula per line
//   [ASS]         whitespace-separated assumable atoms
//   [COMPONENTS]  "name: inputs A B; output D; ok okX" per line
//   [GRAPH]       "C -> okY" per line
//
// "#" starts a comment anywhere. Sections appear at most once; unknown
// section names are rejected. COMPONENTS and GRAPH are mutually exclusive —
// either one supplies the relatedness data local mode needs.
struct SystemFile {
  BeliefBase sd;
  AtomSet ass;
  std::vector<ComponentDecl> components;
  std::vector<std::pair<Atom, Atom>> edges;
  bool has_components = false;
  bool has_edges = false;

  bool has_graph_data() const { return has_components || has_edges; }

  System system() const { return System{sd, ass}; }

  // Builds the relatedness graph from whichever section was present.
  // Throws ContractError when the file carries no graph data.
  RelatednessGraph relatedness_graph() const;
};

SystemFile parse_system_file(std::istream& in);
SystemFile parse_system_text(const std::string& text);

}  // namespace locdiag
