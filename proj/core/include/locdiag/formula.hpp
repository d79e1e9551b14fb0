#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>

namespace locdiag {

// A propositional variable. Names are case-sensitive, non-empty and follow
// the identifier pattern [A-Za-z][A-Za-z0-9_]*. Atoms order by name; that
// total order is the tie-breaker used everywhere determinism matters.
class Atom {
 public:
  Atom() = default;
  explicit Atom(std::string name);

  const std::string& name() const { return name_; }

  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    return a.name_ <=> b.name_;
  }
  friend bool operator==(const Atom& a, const Atom& b) {
    return a.name_ == b.name_;
  }

 private:
  std::string name_;
};

using AtomSet = std::set<Atom>;

bool is_valid_atom_name(const std::string& name);

// Immutable propositional formula: falsum/verum constants, atoms and the
// connectives !, &, | and ->. Nodes are shared, so copies are cheap and
// formulas are safe to use concurrently.
//
// Formulas carry a total structural order (constants, then atoms by name,
// then !, &, |, -> with recursive comparison of operands). Sets of formulas
// iterate in this canonical order.
class Formula {
 public:
  enum class Kind : std::uint8_t { Falsum, Verum, Atom, Not, And, Or, Implies };

  Formula();  // falsum

  static Formula falsum();
  static Formula verum();
  static Formula atom(const std::string& name);
  static Formula atom(const Atom& a);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Kind kind() const;
  const std::string& atom_name() const;  // Kind::Atom only
  Formula child() const;                 // Kind::Not only
  Formula left() const;                  // binary kinds only
  Formula right() const;                 // binary kinds only

  // Set of atoms occurring in the formula.
  AtomSet vars() const;

  // Canonical rendering in the ASCII surface syntax. Parsing the result
  // yields a structurally equal formula.
  std::string to_string() const;

  int compare(const Formula& other) const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.compare(b) == 0;
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    const int c = a.compare(b);
    return c < 0    ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  explicit Formula(NodePtr node) : node_(std::move(node)) {}
  static NodePtr constant_node(Kind kind);

  NodePtr node_;
};

inline AtomSet vars(const Formula& f) { return f.vars(); }

std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace locdiag
