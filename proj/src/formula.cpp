#include "fuzzybdi/formula.hpp"

#include <sstream>

namespace fbdi {

struct Formula::Node {
  Kind kind = Kind::True;
  Term term;
  Term rhs;
  RelOp op = RelOp::Eq;
  Formula left{nullptr};
  Formula right{nullptr};
};

const std::shared_ptr<const Formula::Node>& Formula::true_node() {
  static const auto kTrue = std::make_shared<const Node>();
  return kTrue;
}

Formula::Formula() : node_(true_node()) {}

Formula Formula::literal(Term t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Literal;
  n->term = std::move(t);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->left = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->left = std::move(l);
  n->right = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::disj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->left = std::move(l);
  n->right = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::relational(RelOp op, Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Relational;
  n->op = op;
  n->term = std::move(lhs);
  n->rhs = std::move(rhs);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const Term& Formula::term() const { return node_->term; }
RelOp Formula::op() const { return node_->op; }
const Term& Formula::lhs() const { return node_->term; }
const Term& Formula::rhs() const { return node_->rhs; }
const Formula& Formula::child() const { return node_->left; }
const Formula& Formula::left() const { return node_->left; }
const Formula& Formula::right() const { return node_->right; }

void Formula::collect_vars(std::vector<std::string>& out) const {
  switch (kind()) {
    case Kind::True:
      return;
    case Kind::Literal:
      term().collect_vars(out);
      return;
    case Kind::Relational:
      lhs().collect_vars(out);
      rhs().collect_vars(out);
      return;
    case Kind::Not:
      child().collect_vars(out);
      return;
    case Kind::And:
    case Kind::Or:
      left().collect_vars(out);
      right().collect_vars(out);
      return;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::Literal:
      return a.term() == b.term();
    case Formula::Kind::Relational:
      return a.op() == b.op() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::Not:
      return a.child() == b.child();
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

const char* to_string(RelOp op) {
  switch (op) {
    case RelOp::Eq:
      return "==";
    case RelOp::Neq:
      return "\\==";
    case RelOp::Gt:
      return ">";
    case RelOp::Lt:
      return "<";
    case RelOp::Ge:
      return ">=";
    case RelOp::Le:
      return "<=";
  }
  return "?";
}

namespace {

// Binding strength used by the printer: Or < And < Not/atoms.
int strength(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or:
      return 1;
    case Formula::Kind::And:
      return 2;
    default:
      return 3;
  }
}

void write_formula(std::ostream& os, const Formula& f);

void write_child(std::ostream& os, const Formula& child, int min_strength) {
  bool paren = strength(child.kind()) < min_strength;
  if (paren) os << '(';
  write_formula(os, child);
  if (paren) os << ')';
}

void write_formula(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      os << "true";
      return;
    case Formula::Kind::Literal:
      os << f.term();
      return;
    case Formula::Kind::Relational:
      os << f.lhs() << ' ' << to_string(f.op()) << ' ' << f.rhs();
      return;
    case Formula::Kind::Not:
      os << "not(";
      write_formula(os, f.child());
      os << ')';
      return;
    case Formula::Kind::And:
      write_child(os, f.left(), 2);
      os << " & ";
      write_child(os, f.right(), 3);
      return;
    case Formula::Kind::Or:
      write_child(os, f.left(), 1);
      os << " | ";
      write_child(os, f.right(), 2);
      return;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream os;
  write_formula(os, f);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  write_formula(os, f);
  return os;
}

}  // namespace fbdi
