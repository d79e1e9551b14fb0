#include "locdiag/system_file.hpp"

#include <cctype>
#include <sstream>

#include "locdiag/errors.hpp"
#include "locdiag/parser.hpp"

namespace locdiag {

namespace {

std::string strip(const std::string& line) {
  std::string out = line;
  if (auto hash = out.find('#'); hash != std::string::npos) out.erase(hash);
  const auto first = out.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = out.find_last_not_of(" \t\r");
  return out.substr(first, last - first + 1);
}

Atom parse_atom(const std::string& word, int line_no) {
  if (!is_valid_atom_name(word)) {
    throw ParseError("invalid atom name '" + word + "'", line_no, 1);
  }
  return Atom(word);
}

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

// "name: inputs A B; output D; ok okX"
ComponentDecl parse_component(const std::string& line, int line_no) {
  const auto colon = line.find(':');
  if (colon == std::string::npos) {
    throw ParseError("component line needs 'name:'", line_no, 1);
  }
  ComponentDecl decl;
  decl.name = strip(line.substr(0, colon));
  if (decl.name.empty()) throw ParseError("empty component name", line_no, 1);

  bool saw_inputs = false, saw_output = false, saw_ok = false;
  std::istringstream clauses(line.substr(colon + 1));
  std::string clause;
  while (std::getline(clauses, clause, ';')) {
    const std::vector<std::string> words = split_words(clause);
    if (words.empty()) continue;
    if (words[0] == "inputs") {
      if (words.size() < 2) throw ParseError("component needs at least one input", line_no, 1);
      for (std::size_t i = 1; i < words.size(); ++i) {
        decl.inputs.push_back(parse_atom(words[i], line_no));
      }
      saw_inputs = true;
    } else if (words[0] == "output") {
      if (words.size() != 2) throw ParseError("'output' takes one atom", line_no, 1);
      decl.output = parse_atom(words[1], line_no);
      saw_output = true;
    } else if (words[0] == "ok") {
      if (words.size() != 2) throw ParseError("'ok' takes one atom", line_no, 1);
      decl.ok_atom = parse_atom(words[1], line_no);
      saw_ok = true;
    } else {
      throw ParseError("unknown component clause '" + words[0] + "'", line_no, 1);
    }
  }
  if (!saw_inputs || !saw_output || !saw_ok) {
    throw ParseError("component needs inputs, output and ok clauses", line_no, 1);
  }
  return decl;
}

std::pair<Atom, Atom> parse_edge(const std::string& line, int line_no) {
  const auto arrow = line.find("->");
  if (arrow == std::string::npos) {
    throw ParseError("graph line needs 'from -> to'", line_no, 1);
  }
  const std::vector<std::string> from = split_words(line.substr(0, arrow));
  const std::vector<std::string> to = split_words(line.substr(arrow + 2));
  if (from.size() != 1 || to.size() != 1) {
    throw ParseError("graph line needs exactly one atom on each side", line_no, 1);
  }
  return {parse_atom(from[0], line_no), parse_atom(to[0], line_no)};
}

enum class Section { None, Sd, Ass, Components, Graph };

}  // namespace

RelatednessGraph SystemFile::relatedness_graph() const {
  if (has_components) return RelatednessGraph::from_components(components);
  if (has_edges) {
    RelatednessGraph graph;
    for (const auto& [from, to] : edges) graph.add_edge(from, to);
    return graph;
  }
  throw ContractError("system file carries no COMPONENTS or GRAPH section");
}

SystemFile parse_system_file(std::istream& in) {
  SystemFile out;
  Section section = Section::None;
  bool saw_sd = false, saw_ass = false;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", line_no, 1);
      const std::string name = line.substr(1, line.size() - 2);
      if (name == "SD") {
        if (saw_sd) throw ParseError("duplicate [SD] section", line_no, 1);
        saw_sd = true;
        section = Section::Sd;
      } else if (name == "ASS") {
        if (saw_ass) throw ParseError("duplicate [ASS] section", line_no, 1);
        saw_ass = true;
        section = Section::Ass;
      } else if (name == "COMPONENTS") {
        if (out.has_components) throw ParseError("duplicate [COMPONENTS] section", line_no, 1);
        if (out.has_edges) {
          throw ParseError("[COMPONENTS] and [GRAPH] are mutually exclusive", line_no, 1);
        }
        out.has_components = true;
        section = Section::Components;
      } else if (name == "GRAPH") {
        if (out.has_edges) throw ParseError("duplicate [GRAPH] section", line_no, 1);
        if (out.has_components) {
          throw ParseError("[COMPONENTS] and [GRAPH] are mutually exclusive", line_no, 1);
        }
        out.has_edges = true;
        section = Section::Graph;
      } else {
        throw ParseError("unknown section [" + name + "]", line_no, 1);
      }
      continue;
    }

    switch (section) {
      case Section::None:
        throw ParseError("content before the first section header", line_no, 1);
      case Section::Sd:
        try {
          out.sd.insert(parse_formula(line));
        } catch (const ParseError& e) {
          throw ParseError(std::string(e.what()), line_no, e.column());
        }
        break;
      case Section::Ass:
        for (const std::string& word : split_words(line)) {
          out.ass.insert(parse_atom(word, line_no));
        }
        break;
      case Section::Components:
        out.components.push_back(parse_component(line, line_no));
        break;
      case Section::Graph:
        out.edges.push_back(parse_edge(line, line_no));
        break;
    }
  }

  // File-level checks so bad fixtures fail at parse time, not at first use.
  AtomSet outputs;
  for (const ComponentDecl& decl : out.components) {
    if (out.ass.count(decl.ok_atom) == 0) {
      throw ParseError("component ok atom '" + decl.ok_atom.name() + "' is not in [ASS]", 0, 0);
    }
    if (!outputs.insert(decl.output).second) {
      throw ParseError("duplicate component output '" + decl.output.name() + "'", 0, 0);
    }
  }
  return out;
}

SystemFile parse_system_text(const std::string& text) {
  std::istringstream in(text);
  return parse_system_file(in);
}

}  // namespace locdiag
