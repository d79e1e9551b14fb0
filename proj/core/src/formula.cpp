#include "locdiag/formula.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

#include "locdiag/errors.hpp"

namespace locdiag {

bool is_valid_atom_name(const std::string& name) {
  if (name.empty() || name == "false" || name == "true") return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!is_valid_atom_name(name_)) {
    throw ContractError("invalid atom name: '" + name_ + "'");
  }
}

struct Formula::Node {
  Kind kind;
  std::string name;  // atoms only
  NodePtr lhs;       // Not stores its operand here
  NodePtr rhs;
};

Formula::NodePtr Formula::constant_node(Kind kind) {
  static const NodePtr falsum = std::make_shared<const Node>(Node{Kind::Falsum, {}, {}, {}});
  static const NodePtr verum = std::make_shared<const Node>(Node{Kind::Verum, {}, {}, {}});
  return kind == Kind::Falsum ? falsum : verum;
}

Formula::Formula() : node_(constant_node(Kind::Falsum)) {}

Formula Formula::falsum() { return Formula(constant_node(Kind::Falsum)); }

Formula Formula::verum() { return Formula(constant_node(Kind::Verum)); }

Formula Formula::atom(const std::string& name) { return atom(Atom(name)); }

Formula Formula::atom(const Atom& a) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, a.name(), {}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, std::move(f.node_), {}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Implies, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::atom_name() const {
  if (kind() != Kind::Atom) throw ContractError("atom_name() on a non-atom formula");
  return node_->name;
}

Formula Formula::child() const {
  if (kind() != Kind::Not) throw ContractError("child() on a non-negation formula");
  return Formula(node_->lhs);
}

Formula Formula::left() const {
  if (!node_->rhs) throw ContractError("left() on a non-binary formula");
  return Formula(node_->lhs);
}

Formula Formula::right() const {
  if (!node_->rhs) throw ContractError("right() on a non-binary formula");
  return Formula(node_->rhs);
}

namespace {

void collect_vars(const Formula& f, AtomSet& out) {
  switch (f.kind()) {
    case Formula::Kind::Falsum:
    case Formula::Kind::Verum:
      return;
    case Formula::Kind::Atom:
      out.insert(Atom(f.atom_name()));
      return;
    case Formula::Kind::Not:
      collect_vars(f.child(), out);
      return;
    default:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
      return;
  }
}

// Higher binds tighter: -> is 1, | is 2, & is 3, ! is 4, leaves are 5.
int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    default: return 5;
  }
}

void render(const Formula& f, std::ostream& os);

// Parenthesize operands that bind no tighter than the context requires, so
// the output reparses to the same tree (& and | associate left, -> right).
void render_wrapped(const Formula& f, int min_prec, std::ostream& os) {
  if (precedence(f.kind()) < min_prec) {
    os << '(';
    render(f, os);
    os << ')';
  } else {
    render(f, os);
  }
}

void render(const Formula& f, std::ostream& os) {
  switch (f.kind()) {
    case Formula::Kind::Falsum:
      os << "false";
      return;
    case Formula::Kind::Verum:
      os << "true";
      return;
    case Formula::Kind::Atom:
      os << f.atom_name();
      return;
    case Formula::Kind::Not:
      os << '!';
      render_wrapped(f.child(), 4, os);
      return;
    case Formula::Kind::And:
      render_wrapped(f.left(), 3, os);
      os << " & ";
      render_wrapped(f.right(), 4, os);
      return;
    case Formula::Kind::Or:
      render_wrapped(f.left(), 2, os);
      os << " | ";
      render_wrapped(f.right(), 3, os);
      return;
    case Formula::Kind::Implies:
      render_wrapped(f.left(), 2, os);
      os << " -> ";
      render_wrapped(f.right(), 1, os);
      return;
  }
}

}  // namespace

AtomSet Formula::vars() const {
  AtomSet out;
  collect_vars(*this, out);
  return out;
}

std::string Formula::to_string() const {
  std::ostringstream os;
  render(*this, os);
  return os.str();
}

int Formula::compare(const Formula& other) const {
  if (node_ == other.node_) return 0;
  const auto lk = static_cast<int>(kind());
  const auto rk = static_cast<int>(other.kind());
  if (lk != rk) return lk < rk ? -1 : 1;
  switch (kind()) {
    case Kind::Falsum:
    case Kind::Verum:
      return 0;
    case Kind::Atom: {
      const int c = node_->name.compare(other.node_->name);
      return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    case Kind::Not:
      return child().compare(other.child());
    default: {
      const int c = left().compare(other.left());
      if (c != 0) return c;
      return right().compare(other.right());
    }
  }
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  render(f, os);
  return os;
}

}  // namespace locdiag
